//! Random operators and expressions, and the property checks run on them.
//! Shared by the property tests and the acceptance harness.
#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

use sointegra_core::exactfield::{FieldElem, Var};
use sointegra_core::exprdsl::{
    parse_ast, parse_operator, parse_scalar, print_operator, print_scalar, BinOp, Expr, ExprKind,
    OpAtom,
};
use sointegra_core::operator::{Algebra, DiffOp, PauliCoeff};
use sointegra_core::spectral::{special, special_derivative, SpecialKind};

pub const CASES: u32 = 500;

fn atom(k: u8) -> FieldElem {
    match k {
        0 => FieldElem::x(),
        1 => FieldElem::y(),
        2 => FieldElem::z(),
        3 => FieldElem::r(),
        4 => FieldElem::var(Var::Mu),
        5 => FieldElem::s(),
        _ => FieldElem::one(),
    }
}

/// A small element: `(c0 + c1 a + c2 a b) / d` with `d` one of a few
/// nonvanishing denominators.
pub fn field() -> impl Strategy<Value = FieldElem> {
    (-3i64..=3, -3i64..=3, -2i64..=2, 0u8..7, 0u8..7, 0u8..4).prop_map(|(c0, c1, c2, a, b, d)| {
        let num = FieldElem::int(c0)
            + FieldElem::int(c1) * atom(a)
            + FieldElem::int(c2) * atom(a) * atom(b);
        let den = match d {
            0 => FieldElem::one(),
            1 => FieldElem::r(),
            2 => FieldElem::one() + FieldElem::x() * FieldElem::x(),
            _ => FieldElem::int(2),
        };
        num / den
    })
}

pub fn pauli() -> impl Strategy<Value = PauliCoeff> {
    (field(), 0usize..4, field(), any::<bool>()).prop_map(|(f, k, g, imag)| {
        let g = if imag { FieldElem::i() * g } else { g };
        let mut c = [FieldElem::zero(), FieldElem::zero(), FieldElem::zero(), FieldElem::zero()];
        c[0] = f;
        c[k] = &c[k] + &g;
        PauliCoeff::new(c)
    })
}

/// Up to two terms of derivative order at most `max_order`.
pub fn operator(max_order: u8) -> impl Strategy<Value = DiffOp> {
    let d = (0..=max_order, 0..3usize, 0..3usize).prop_map(move |(o, a, b)| {
        let mut d = [0u8; 3];
        if o >= 1 {
            d[a] += 1;
        }
        if o >= 2 {
            d[b] += 1;
        }
        d
    });
    prop::collection::vec((d, pauli()), 1..=2).prop_map(|ts| {
        let mut op = DiffOp::zero();
        for (d, p) in ts {
            op.add_term(d, p);
        }
        op
    })
}

fn leaf() -> impl Strategy<Value = ExprKind> {
    let vars = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::R,
        Var::S,
        Var::T,
        Var::Hbar,
        Var::Beta,
        Var::Mu,
        Var::Gamma,
        Var::A1,
        Var::B3,
        Var::Alpha2,
        Var::C1,
    ];
    let atoms = [
        OpAtom::P(1),
        OpAtom::P(3),
        OpAtom::L(2),
        OpAtom::Sigma(1),
        OpAtom::Sigma(3),
        OpAtom::SigmaL,
        OpAtom::SigmaX,
        OpAtom::SigmaP,
        OpAtom::XP,
        OpAtom::Laplacian,
    ];
    prop_oneof![
        (0u32..1000).prop_map(|n| ExprKind::Int(BigInt::from(n))),
        Just(ExprKind::Imag),
        prop::sample::select(vars.to_vec()).prop_map(ExprKind::Var),
        prop::sample::select(atoms.to_vec()).prop_map(ExprKind::Op),
    ]
}

/// Arbitrary syntax trees (not necessarily well typed).
pub fn ast() -> impl Strategy<Value = Expr> {
    let b = |e: Expr| Box::new(e);
    leaf().prop_map(Expr::new).prop_recursive(5, 48, 3, move |inner| {
        let ops = prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::new(ExprKind::Neg(b(a)))),
            (ops, inner.clone(), inner.clone())
                .prop_map(move |(o, x, y)| Expr::new(ExprKind::Bin(o, b(x), b(y)))),
            (inner.clone(), -4i64..=6).prop_map(move |(a, e)| Expr::new(ExprKind::Pow(b(a), e))),
            inner.clone().prop_map(move |a| Expr::new(ExprKind::Sqrt(b(a)))),
            (inner.clone(), inner.clone())
                .prop_map(move |(x, y)| Expr::new(ExprKind::Anti(b(x), b(y)))),
            (inner.clone(), inner).prop_map(move |(x, y)| Expr::new(ExprKind::Comm(b(x), b(y)))),
        ]
    })
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

pub fn jacobi_identity((a, b, c): (DiffOp, DiffOp, DiffOp)) -> Result<(), TestCaseError> {
    let s = a
        .commutator(&b)
        .commutator(&c)
        .add(&b.commutator(&c).commutator(&a))
        .add(&c.commutator(&a).commutator(&b));
    prop_assert!(s.is_zero(), "Jacobi sum has {} terms", s.terms().len());
    prop_assert_eq!(a.commutator(&b), b.commutator(&a).neg());
    Ok(())
}

pub fn adjoint_involution((a, b): (DiffOp, DiffOp)) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a.adjoint().adjoint(), &a);
    prop_assert_eq!(a.compose(&b).adjoint(), b.adjoint().compose(&a.adjoint()));
    Ok(())
}

pub fn associativity((a, b, c): (DiffOp, DiffOp, DiffOp)) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    Ok(())
}

pub fn mixed_partials((f, i, j): (FieldElem, usize, usize)) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.d(i).d(j), f.d(j).d(i));
    // ∂_i ∘ ∂_j = ∂_j ∘ ∂_i as operators, also after a multiplication
    let alg = Algebra::unit();
    let m = DiffOp::scalar(f);
    let lhs = alg.d(i).compose(&alg.d(j)).compose(&m);
    let rhs = alg.d(j).compose(&alg.d(i)).compose(&m);
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// Print then parse gives back the tree; for well-typed inputs print is
/// idempotent on canonical values.
pub fn parser_round_trip(e: Expr) -> Result<(), TestCaseError> {
    let text = e.to_string();
    let back = parse_ast(&text).map_err(|err| fail(format!("{text}: {err}")))?;
    prop_assert_eq!(&back, &e);
    if let Ok(f) = parse_scalar(&text) {
        let printed = print_scalar(&f);
        let again = parse_scalar(&printed).map_err(|err| fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&again, &f);
        prop_assert_eq!(print_scalar(&again), printed);
    } else if let Ok(op) = parse_operator(&text, &Algebra::unit()) {
        let alg = Algebra::unit();
        let printed = print_operator(&op, &alg);
        let again = parse_operator(&printed, &alg).map_err(|err| fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&again, &op);
    }
    Ok(())
}

/// Analytic first derivative against a seven-point central difference.
pub fn jacobi_derivative((n, a, b, z): (u32, f64, f64, f64)) -> Result<(), TestCaseError> {
    let k = SpecialKind::Jacobi { n, alpha: a, beta: b };
    let h = 1e-3;
    let f = |x: f64| special(k, x).unwrap();
    let fd = (f(z + 3.0 * h) - 9.0 * f(z + 2.0 * h) + 45.0 * f(z + h) - 45.0 * f(z - h)
        + 9.0 * f(z - 2.0 * h)
        - f(z - 3.0 * h))
        / (60.0 * h);
    let d = special_derivative(k, z, 1).unwrap();
    prop_assert!((d - fd).abs() < 1e-8, "n={} a={} b={} z={}: {} vs {}", n, a, b, z, d, fd);
    Ok(())
}

pub fn jacobi_args() -> impl Strategy<Value = (u32, f64, f64, f64)> {
    (0u32..8, -0.9f64..3.0, -0.9f64..3.0, -0.9f64..0.9)
}

pub fn triple(order: u8) -> impl Strategy<Value = (DiffOp, DiffOp, DiffOp)> {
    (operator(order), operator(order), operator(order))
}

pub fn partial_args() -> impl Strategy<Value = (FieldElem, usize, usize)> {
    (field(), 0usize..3, 0usize..3)
}

/// Run `check` on `cases` deterministic draws; `Err` holds the minimal failure.
pub fn run<S: Strategy>(
    strategy: S,
    cases: u32,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&strategy, check).map_err(|e| match e {
        TestError::Fail(why, v) => format!("{why} at {v:?}"),
        TestError::Abort(why) => format!("aborted: {why}"),
    })
}

/// The named suites with their strategies.
pub fn suites() -> Vec<(&'static str, Box<dyn Fn(u32) -> Result<(), String>>)> {
    vec![
        ("jacobi_identity", Box::new(|n| run(triple(1), n, jacobi_identity))),
        ("adjoint_involution", Box::new(|n| run((operator(2), operator(1)), n, adjoint_involution))),
        ("compose_associativity", Box::new(|n| run(triple(2), n, associativity))),
        ("mixed_partials", Box::new(|n| run(partial_args(), n, mixed_partials))),
        ("parser_round_trip", Box::new(|n| run(ast(), n, parser_round_trip))),
        ("jacobi_derivative", Box::new(|n| run(jacobi_args(), n, jacobi_derivative))),
    ]
}
