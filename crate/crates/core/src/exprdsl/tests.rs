use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::exactfield::Var;
use crate::multiplets::pseudoscalar_one;

fn unit() -> Algebra {
    Algebra::unit()
}

#[test]
fn scalar_examples() {
    let v1 = parse_scalar("1/(2*r^2)").unwrap();
    assert_eq!(v1, FieldElem::one() / (FieldElem::int(2) * FieldElem::rho()));
    let b = parse_scalar("(1 + 1/sqrt(1+beta*r^2))/(2*r^2)").unwrap();
    let s = FieldElem::s();
    let expected = (FieldElem::one() + FieldElem::one() / s) / (FieldElem::int(2) * FieldElem::rho());
    assert_eq!(b, expected);
    assert_eq!(parse_scalar("sqrt(x^2 + y^2 + z^2)").unwrap(), FieldElem::r());
    assert_eq!(parse_scalar("sqrt(r^2)").unwrap(), FieldElem::r());
    assert_eq!(parse_scalar("sqrt(4*r^4 + gamma)").unwrap(), FieldElem::var(Var::T));
}

#[test]
fn located_errors() {
    let e = parse_scalar("x/").unwrap_err();
    assert!(matches!(e, ExprError::Syntax { line: 1, col: 3, .. }), "{e}");
    let e = parse_scalar("1 +\n  sqrt(1 + r)").unwrap_err();
    assert!(matches!(e, ExprError::UnsupportedRadical { line: 2, col: 3, .. }), "{e}");
    let e = parse_operator("x / p1", &unit()).unwrap_err();
    assert!(matches!(e, ExprError::Type { col: 5, .. }), "{e}");
    assert!(matches!(parse_scalar("p1 + x"), Err(ExprError::Type { .. })));
    assert!(matches!(parse_scalar("1/(x - x)"), Err(ExprError::Field { .. })));
    assert!(matches!(parse_scalar("x ^ 1000"), Err(ExprError::Syntax { .. })));
    assert!(matches!(parse_scalar("(x^60)^2"), Err(ExprError::Limit { .. })));
    assert!(matches!(parse_scalar("foo"), Err(ExprError::Syntax { col: 1, .. })));
    assert!(matches!(parse_scalar("x $ y"), Err(ExprError::Syntax { col: 3, .. })));
    assert!(matches!(parse_operator("p1^-1", &unit()), Err(ExprError::Type { .. })));
    let deep = "(".repeat(10_000) + "x" + &")".repeat(10_000);
    assert!(matches!(parse_scalar(&deep), Err(ExprError::Limit { .. } | ExprError::Syntax { .. })));
    assert!(matches!(parse_ast_bytes(b"x + \xff"), Err(ExprError::Syntax { line: 1, col: 5, .. })));
}

#[test]
fn operator_examples() {
    let alg = unit();
    assert_eq!(parse_operator("sigma.x / r", &alg).unwrap(), pseudoscalar_one(&alg));
    assert_eq!(parse_operator("L3 + (1/2)*s3", &alg).unwrap(), alg.j(3));
    let h = parse_operator("-(1/2)*laplacian + mu/r + (1/2)*{1/(2*r^2), sigma.L}", &alg).unwrap();
    let v1 = FieldElem::one() / (FieldElem::int(2) * FieldElem::rho());
    let v0 = FieldElem::var(Var::Mu) / FieldElem::r();
    assert_eq!(h, alg.hamiltonian(&v0, &v1));
    let sym = Algebra::symbolic();
    assert_eq!(parse_operator("L3 + (hbar/2)*s3", &sym).unwrap(), sym.j(3));
    assert_eq!(
        parse_operator("-(hbar^2/2)*laplacian", &sym).unwrap(),
        sym.kinetic()
    );
    assert_eq!(parse_operator("[x, p1]", &sym).unwrap(), DiffOp::scalar(FieldElem::i() * FieldElem::var(Var::Hbar)));
}

#[test]
fn printer_examples() {
    let alg = unit();
    assert_eq!(print_scalar(&parse_scalar("r*r").unwrap()), "x^2 + y^2 + z^2");
    assert_eq!(print_operator(&alg.j(3), &alg), "L3 + (1/2)*s3");
    assert_eq!(print_operator(&alg.sigma_dot_l(), &alg), "s1*L1 + s2*L2 + s3*L3");
    assert_eq!(print_operator(&DiffOp::zero(), &alg), "0");
    assert_eq!(print_operator(&alg.p(1).neg(), &alg), "-p1");
    let sym = Algebra::symbolic();
    for op in [sym.j(1), sym.kinetic(), sym.sigma_dot_p(), sym.x_dot_p()] {
        let text = print_operator(&op, &sym);
        assert_eq!(parse_operator(&text, &sym).unwrap(), op, "{text}");
    }
}

fn leaf() -> impl Strategy<Value = ExprKind> {
    let vars = [Var::X, Var::Y, Var::Z, Var::R, Var::S, Var::Hbar, Var::Mu, Var::Beta, Var::Alpha2, Var::Gamma];
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

fn ast() -> impl Strategy<Value = Expr> {
    let b = |e: Expr| Box::new(e);
    leaf().prop_map(Expr::new).prop_recursive(5, 48, 3, move |inner| {
        let ops = prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::new(ExprKind::Neg(b(a)))),
            (ops, inner.clone(), inner.clone())
                .prop_map(move |(o, x, y)| Expr::new(ExprKind::Bin(o, b(x), b(y)))),
            (inner.clone(), -4i64..=6).prop_map(move |(a, e)| Expr::new(ExprKind::Pow(b(a), e))),
            inner.clone().prop_map(move |a| Expr::new(ExprKind::Sqrt(b(a)))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::new(ExprKind::Anti(b(x), b(y)))),
            (inner.clone(), inner).prop_map(move |(x, y)| Expr::new(ExprKind::Comm(b(x), b(y)))),
        ]
    })
}

/// Cheap well-typed input: a small function, optionally times an atom.
fn scalar_text() -> impl Strategy<Value = String> {
    let leaf = prop::sample::select(vec!["x", "y", "z", "r", "s", "mu", "hbar", "beta", "i", "2", "3", "1/2"]);
    (leaf.clone(), leaf.clone(), leaf, prop::sample::select(vec!["+", "-", "*", "/"]), 0u8..3).prop_map(
        |(a, b, c, op, shape)| match shape {
            0 => format!("{a} {op} {b}"),
            1 => format!("({a} {op} {b})/({c} + 1)"),
            _ => format!("{a}^2 {op} {c}*{b}"),
        },
    )
}

fn operator_text() -> impl Strategy<Value = String> {
    let atom = prop::sample::select(vec![
        "p1", "p2", "p3", "L1", "L2", "L3", "s1", "s2", "s3", "sigma.L", "sigma.x", "sigma.p", "x.p", "laplacian", "1",
    ]);
    let term = (scalar_text(), atom.clone(), atom).prop_map(|(f, a, b)| format!("({f})*{a}*{b}"));
    prop::collection::vec(term, 1..3).prop_map(|ts| ts.join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ast_round_trip(e in ast()) {
        let text = e.to_string();
        let back = parse_ast(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back, e);
    }

    #[test]
    fn scalar_round_trip(text in scalar_text()) {
        if let Ok(f) = parse_scalar(&text) {
            let printed = print_scalar(&f);
            let back = parse_scalar(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(print_scalar(&back), printed);
        }
    }

    #[test]
    fn operator_round_trip(text in operator_text(), symbolic in any::<bool>()) {
        let alg = if symbolic { Algebra::symbolic() } else { Algebra::unit() };
        if let Ok(op) = parse_operator(&text, &alg) {
            let printed = print_operator(&op, &alg);
            let back = parse_operator(&printed, &alg).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
            prop_assert_eq!(&back, &op);
            prop_assert_eq!(print_operator(&back, &alg), printed);
        }
    }

    #[test]
    fn any_text_parses_or_locates(text in "\\PC{0,40}") {
        check_total(&text);
    }

    #[test]
    fn token_soup_parses_or_locates(parts in prop::collection::vec(
        prop::sample::select(vec![
            "x", "r", "s", "(", ")", "{", "}", "[", "]", ",", "+", "-", "*", "/", "^", "2", "0",
            "sqrt", "p1", "sigma.L", "laplacian", "i", "\n", " ", "mu", "beta", "1+beta*r^2",
        ]),
        0..24,
    )) {
        check_total(&parts.concat());
    }

    #[test]
    fn any_bytes_parse_or_locate(bytes in prop::collection::vec(any::<u8>(), 0..40)) {
        if let Err(e) = parse_ast_bytes(&bytes) {
            prop_assert!(e.position().line >= 1 && e.position().col >= 1);
        }
    }
}

fn check_total(text: &str) {
    let lines = text.split('\n').count();
    for r in [
        parse_scalar(text).map(|_| ()),
        parse_operator(text, &Algebra::unit()).map(|_| ()),
    ] {
        if let Err(e) = r {
            let p = e.position();
            assert!(p.line >= 1 && p.line <= lines && p.col >= 1, "{text:?}: {e}");
        }
    }
}
