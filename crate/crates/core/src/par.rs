//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it they are plain sequential loops with identical results.

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "SOINTEGRA_THREADS";

/// Parsed value of `SOINTEGRA_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!(
                "{THREADS_ENV} must be a positive integer, got `{s}`"
            )),
        },
    }
}

/// Run `f` with parallelism capped by `SOINTEGRA_THREADS`.
#[cfg(feature = "parallel")]
pub fn with_thread_cap<R: Send>(f: impl FnOnce() -> R + Send) -> Result<R, String> {
    match thread_cap()? {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| e.to_string())?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_thread_cap<R: Send>(f: impl FnOnce() -> R + Send) -> Result<R, String> {
    thread_cap()?;
    Ok(f())
}

/// Order-preserving map.
#[cfg(feature = "parallel")]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Order-preserving map over `0..n`.
pub fn map_range<R: Send>(n: usize, f: impl Fn(usize) -> R + Sync + Send) -> Vec<R> {
    let idx: Vec<usize> = (0..n).collect();
    map(&idx, |&k| f(k))
}

/// Sequential reference map, always available for benchmarking against [`map`].
pub fn map_seq<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

/// True when the crate was built with rayon support.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
