use crate::exactfield::{DiffVar, FieldElem, Var};
use crate::operator::{order_of, Algebra, Deriv, DiffOp};

const COORDS: [Var; 9] = [Var::X, Var::Y, Var::Z, Var::R, Var::S, Var::T, Var::Rad, Var::SRad, Var::TRad];

fn coordinate_free(f: &FieldElem) -> bool {
    COORDS.iter().all(|v| !f.contains_var(*v))
}

struct Term {
    coef: FieldElem,
    atoms: Vec<String>,
}

fn plain(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `s` is one parenthesized group.
fn enclosed(s: &str) -> bool {
    if !s.starts_with('(') || !s.ends_with(')') {
        return false;
    }
    let mut depth = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && k + 1 < s.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

fn wrap(s: String) -> String {
    if plain(&s) || enclosed(&s) {
        s
    } else {
        format!("({s})")
    }
}

fn render(terms: &[Term]) -> String {
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let (neg, mag) = match t.coef.as_constant() {
            Some(g) if g.is_negative_display() => (true, -&t.coef),
            _ => (false, t.coef.clone()),
        };
        let coef = wrap(print_scalar(&mag));
        let body = if t.atoms.is_empty() {
            coef
        } else if mag.is_one() {
            t.atoms.join("*")
        } else {
            format!("{coef}*{}", t.atoms.join("*"))
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn sigma_atom(a: usize) -> Vec<String> {
    if a == 0 {
        Vec::new()
    } else {
        vec![format!("s{a}")]
    }
}

fn p_monomial(d: &Deriv) -> Vec<String> {
    (0..3)
        .filter(|&k| d[k] > 0)
        .map(|k| if d[k] == 1 { format!("p{}", k + 1) } else { format!("p{}^{}", k + 1, d[k]) })
        .collect()
}

/// Canonical text for a function. Denominator factors are written as
/// negative powers so that reading the text back rebuilds the same factors.
pub fn print_scalar(f: &FieldElem) -> String {
    let num = f.numerator().to_string();
    let mut atoms = f.denominator_atoms().peekable();
    if atoms.peek().is_none() {
        return num;
    }
    let mut out = wrap(num);
    for (a, e) in atoms {
        let single = a.len() == 1 && a.leading().is_some_and(|(_, c)| c.is_one());
        let a = a.to_string();
        if single && plain(&a) {
            out.push_str(&format!("*{a}^-{e}"));
        } else {
            out.push_str(&format!("*({a})^-{e}"));
        }
    }
    out
}

/// Canonical text for an operator: terms by descending order, coefficients
/// on the left, derivatives written through `p_k`, and angular momenta
/// `L_k` pulled out of first-order parts where their weight is free of
/// coordinates.
pub fn print_operator(op: &DiffOp, alg: &Algebra) -> String {
    // ∂_k = (i/ħ) p_k
    let to_p = FieldElem::i() / alg.hbar.clone();
    let mut by_order: Vec<(&Deriv, _)> = op.terms().iter().collect();
    by_order.sort_by(|(a, _), (b, _)| order_of(b).cmp(&order_of(a)).then(b.cmp(a)));
    let mut terms = Vec::new();
    let mut k = 0;
    while k < by_order.len() {
        let ord = order_of(by_order[k].0);
        let group: Vec<_> = by_order[k..].iter().take_while(|(d, _)| order_of(d) == ord).collect();
        k += group.len();
        if ord == 1 {
            let (mut ls, mut ps) = (Vec::new(), Vec::new());
            for a in 0..4 {
                let mut g: [FieldElem; 3] = Default::default();
                for (d, p) in &group {
                    let axis = d.iter().position(|&e| e == 1).expect("first-order index");
                    g[axis] = &p.c[a] * &to_p;
                }
                // L_l = x_b p_c − x_c p_b
                for (l, b, c) in [(1, 1, 2), (2, 2, 0), (3, 0, 1)] {
                    let w = g[c].derivative(DiffVar::axis(b));
                    if w.is_zero() || !coordinate_free(&w) || w != -g[b].derivative(DiffVar::axis(c)) {
                        continue;
                    }
                    g[c] = &g[c] - &(&w * &FieldElem::coord(b));
                    g[b] = &g[b] + &(&w * &FieldElem::coord(c));
                    let mut atoms = sigma_atom(a);
                    atoms.push(format!("L{l}"));
                    ls.push(Term { coef: w, atoms });
                }
                for (axis, gk) in g.iter().enumerate() {
                    if !gk.is_zero() {
                        let mut atoms = sigma_atom(a);
                        atoms.push(format!("p{}", axis + 1));
                        ps.push(Term { coef: gk.clone(), atoms });
                    }
                }
            }
            terms.extend(ls);
            terms.extend(ps);
            continue;
        }
        let scale = to_p.pow(ord as i32).expect("hbar is nonzero");
        for (d, p) in &group {
            for a in 0..4 {
                if p.c[a].is_zero() {
                    continue;
                }
                let mut atoms = sigma_atom(a);
                atoms.extend(p_monomial(d));
                terms.push(Term { coef: &p.c[a] * &scale, atoms });
            }
        }
    }
    render(&terms)
}
