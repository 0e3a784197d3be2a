//! Serialization helpers for reports.

use serde::Serializer;

/// Serialize any `Display` value as its string form.
pub fn ser_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
