//! The radial determining equations per family, as printed, at `ħ = 1`.

use serde::Serialize;

use crate::exactfield::radial::{d_dr, r};
use crate::exactfield::FieldElem;

use super::{Family, RadialCombo};

#[derive(Clone, Debug, Serialize)]
pub struct RadialEquation {
    pub family: Family,
    /// Momentum order the equation comes from.
    pub order: u8,
    /// Case the equation is stated under, if any.
    pub case: Option<&'static str>,
    pub label: &'static str,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub residual: FieldElem,
}

fn eq(
    family: Family,
    order: u8,
    case: Option<&'static str>,
    label: &'static str,
    residual: FieldElem,
) -> RadialEquation {
    RadialEquation {
        family,
        order,
        case,
        label,
        residual,
    }
}

fn n(k: i64) -> FieldElem {
    FieldElem::int(k)
}

/// `2rV1²(2r²V1 − 3) − V1' = 0`, shared by the P and V families.
pub fn pseudoscalar_compatibility(v: &FieldElem) -> FieldElem {
    let r = r();
    n(2) * &r * v * v * (n(2) * &r * &r * v - n(3)) - d_dr(v)
}

/// `2V1(3 − 6r²V1 + 4r⁴V1²) + rV1' = 0`, from the A and T families.
pub fn tensor_compatibility(v: &FieldElem) -> FieldElem {
    let r = r();
    let r2 = &r * &r;
    n(2) * v * (n(3) - n(6) * &r2 * v + n(4) * &r2 * &r2 * v * v) + &r * d_dr(v)
}

/// Every printed equation of the family, evaluated on `combo` and `V1`.
/// Integration constants enter through the `f_j` themselves; `f_j = c`
/// equations appear as `f_j' = 0`.
pub fn radial_ode_residuals(combo: &RadialCombo, v: &FieldElem) -> Vec<RadialEquation> {
    let fam = combo.family;
    let f = |j: usize| combo.f[j - 1].clone();
    let d = |j: usize| d_dr(&combo.f[j - 1]);
    let r = r();
    let r2 = &r * &r;
    let vd = d_dr(v);
    let one = FieldElem::one();
    match fam {
        Family::S => Vec::new(),
        Family::P => vec![
            eq(
                fam,
                2,
                None,
                "f3' = -2 r f3 V1",
                d(3) + n(2) * &r * f(3) * v,
            ),
            eq(fam, 2, None, "f3 = -2 f2 V1", f(3) + n(2) * f(2) * v),
            eq(
                fam,
                2,
                None,
                "2 r V1^2 (2 r^2 V1 - 3) - V1' = 0",
                pseudoscalar_compatibility(v),
            ),
        ],
        Family::V => vec![
            eq(fam, 2, None, "f2 = c1", d(2)),
            eq(fam, 2, None, "f3 = 0", f(3)),
            eq(fam, 2, None, "f4 + f5 = 0", f(4) + f(5)),
            eq(
                fam,
                2,
                None,
                "r^2 f4' = f6' - 2 r f4",
                &r2 * d(4) - d(6) + n(2) * &r * f(4),
            ),
            eq(
                fam,
                2,
                None,
                "f4 - 2 f6 V1 + f8 (1 - 2 r^2 V1) = 0",
                f(4) - n(2) * f(6) * v + f(8) * (&one - n(2) * &r2 * v),
            ),
            eq(
                fam,
                2,
                None,
                "f8' = -2 r V1 (f8 + f4) - f4'",
                d(8) + n(2) * &r * v * (f(8) + f(4)) + d(4),
            ),
            eq(fam, 1, Some("III"), "f1 = 0", f(1)),
            eq(
                fam,
                1,
                Some("III"),
                "f7' + 2 r f7 V1 = 0",
                d(7) + n(2) * &r * f(7) * v,
            ),
            eq(
                fam,
                1,
                Some("III"),
                "2 r f7 V1 + c1 V1' = 0",
                n(2) * &r * f(7) * v + f(2) * &vd,
            ),
        ],
        Family::A => vec![
            eq(fam, 2, None, "f1 = c1", d(1)),
            eq(fam, 2, None, "f3 = 0", f(3)),
            eq(
                fam,
                2,
                None,
                "f4' = 4 r f4 V1 (1 - r^2 V1)",
                d(4) - n(4) * &r * f(4) * v * (&one - &r2 * v),
            ),
            eq(
                fam,
                2,
                None,
                "f6' = 2 r (f4 - f6) V1",
                d(6) - n(2) * &r * (f(4) - f(6)) * v,
            ),
            eq(
                fam,
                2,
                None,
                "f4 = -f6 (1 - 2 r^2 V1)",
                f(4) + f(6) * (&one - n(2) * &r2 * v),
            ),
            eq(
                fam,
                2,
                None,
                "f7' + 2 r f7 V1 = 0",
                d(7) + n(2) * &r * f(7) * v,
            ),
            eq(fam, 2, None, "f7 = -2 f4 V1", f(7) + n(2) * f(4) * v),
            eq(
                fam,
                2,
                None,
                "f6 (2 V1 (3 - 6 r^2 V1 + 4 r^4 V1^2) + r V1') = 0",
                f(6) * tensor_compatibility(v),
            ),
            eq(
                fam,
                2,
                None,
                "f4 (2 r V1^2 (3 - 2 r^2 V1) + V1') = 0",
                f(4) * (n(2) * &r * v * v * (n(3) - n(2) * &r2 * v) + &vd),
            ),
            eq(fam, 1, Some("II"), "f2 = c2", d(2)),
            eq(
                fam,
                1,
                Some("II"),
                "f5 = (c1 - 2 c2) V1",
                f(5) - (f(1) - n(2) * f(2)) * v,
            ),
            eq(
                fam,
                1,
                Some("II"),
                "f5' + 2 r f5 V1 = 0",
                d(5) + n(2) * &r * f(5) * v,
            ),
        ],
        Family::T => {
            let g = f(10) - f(9);
            vec![
                eq(fam, 2, None, "f2 = 0", f(2)),
                eq(fam, 2, None, "f4 = 0", f(4)),
                eq(fam, 2, None, "f3' = -2 f7'", d(3) + n(2) * d(7)),
                eq(
                    fam,
                    2,
                    None,
                    "f3 + f5 + f7 + 2 (f10 - f9) V1 = 0",
                    f(3) + f(5) + f(7) + n(2) * &g * v,
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f3 + 2 f5 + 4 r^2 (f10 - f9) V1^2 = 0",
                    f(3) + n(2) * f(5) + n(4) * &r2 * &g * v * v,
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f7 - f5 + 2 (r^2 f5 + f8 + f10) V1 = 0",
                    f(7) - f(5) + n(2) * (&r2 * f(5) + f(8) + f(10)) * v,
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f7' - 2 r (f5 - f7) V1 - f5' = 0",
                    d(7) - n(2) * &r * (f(5) - f(7)) * v - d(5),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f8 + f9 + r^2 (f5 + 2 (f10 - f9) V1) = 0",
                    f(8) + f(9) + &r2 * (f(5) + n(2) * &g * v),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f10' - f9' + 4 r (f10 - f9) V1 (1 - r^2 V1) = 0",
                    d(10) - d(9) + n(4) * &r * &g * v * (&one - &r2 * v),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "(f10 - f9)(2 V1 (3 - 6 r^2 V1 + 4 r^4 V1^2) + r V1') = 0",
                    &g * tensor_compatibility(v),
                ),
                eq(fam, 1, Some("I"), "f1 = 0", f(1)),
                eq(fam, 1, Some("I"), "f6 = 0", f(6)),
            ]
        }
        Family::Y => {
            let w = f(8) + &r2 * f(9);
            let r4 = &r2 * &r2;
            vec![
                eq(
                    fam,
                    2,
                    None,
                    "f3 = -2 (f1 + 2 f9) V1",
                    f(3) + n(2) * (f(1) + n(2) * f(9)) * v,
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f4 = -2 f8 V1 + (1 - 2 r^2 V1) f9",
                    f(4) + n(2) * f(8) * v - (&one - n(2) * &r2 * v) * f(9),
                ),
                eq(fam, 2, None, "f5 = 0", f(5)),
                eq(fam, 2, None, "f7 = f9", f(7) - f(9)),
                eq(
                    fam,
                    2,
                    None,
                    "f1 = 2 (2 f8 V1 (1 - r^2 V1) - f9 (1 - 2 r^2 V1 (1 - r^2 V1)))",
                    f(1) - n(2)
                        * (n(2) * f(8) * v * (&one - &r2 * v)
                            - f(9) * (&one - n(2) * &r2 * v * (&one - &r2 * v))),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "f8' = -r (2 f9 + r f9')",
                    d(8) + &r * (n(2) * f(9) + &r * d(9)),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "(f8 + r^2 f9)(2 r V1^2 (3 - 2 r^2 V1) - V1') + f9' = 0",
                    &w * (n(2) * &r * v * v * (n(3) - n(2) * &r2 * v) - &vd) + d(9),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "(f8 + r^2 f9)(2 r V1^2 (3 - 4 r^2 V1 + 2 r^4 V1^2) - (1 - 2 r^2 V1) V1') = 0",
                    &w * (n(2) * &r * v * v * (n(3) - n(4) * &r2 * v + n(2) * &r4 * v * v)
                        - (&one - n(2) * &r2 * v) * &vd),
                ),
                eq(
                    fam,
                    2,
                    None,
                    "(f8 + r^2 f9)(2 r V1^2 (3 - 4 r^2 V1) + (6 r^2 V1 (1 - r^2 V1) - 1) V1') = 0",
                    &w * (n(2) * &r * v * v * (n(3) - n(4) * &r2 * v)
                        + (n(6) * &r2 * v * (&one - &r2 * v) - &one) * &vd),
                ),
                eq(fam, 1, Some("I"), "f2 = 0", f(2)),
                eq(fam, 1, Some("I"), "f6 = 0", f(6)),
            ]
        }
    }
}
