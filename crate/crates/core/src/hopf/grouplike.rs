use crate::algebra::{reduce_j_power, Flavor, Monomial, Tail};
use crate::coeff::ScalarField;
use crate::linalg;
use crate::report::{CheckItem, Report};

use super::{tensor_matrix, Hopf};

/// Whether `J^(ij) = K^i Kb^j` satisfies `Delta(x) = x (x) x`.
pub fn grouplike_check<F: ScalarField>(h: &Hopf<F>, i: u32, j: u32) -> bool {
    is_grouplike(h, reduce_j_power(i, j))
}

fn is_grouplike<F: ScalarField>(h: &Hopf<F>, m: Monomial) -> bool {
    let x = h.alg().monomial(m);
    match h.coproduct(&x) {
        Ok(d) => d == crate::tensor::outer(h.alg(), [&x, &x]),
        Err(_) => false,
    }
}

/// Basis monomials of degree at most `bound` that are group-like.
pub fn grouplike_set<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Vec<Monomial> {
    h.domain(bound)
        .into_iter()
        .filter(|&m| is_grouplike(h, m))
        .collect()
}

/// For every basis monomial with a nonzero `E` or `F` degree up to `bound`,
/// confirms that `Delta(x) != x (x) x` and that `Delta(x)` has tensor rank at
/// least two. The reported witness is a term of `Delta(x)` outside
/// `x (x) x`.
pub fn grouplike_nonmembers<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Report {
    let field = h.field();
    let items = h
        .domain(bound)
        .into_iter()
        .filter(|m| m.e + m.f > 0)
        .map(|m| {
            let name = m.render(h.side());
            let x = h.alg().monomial(m);
            let Ok(d) = h.coproduct(&x) else {
                return CheckItem::with_pass(name, "defined".into(), "error".into(), false);
            };
            let square = crate::tensor::outer(h.alg(), [&x, &x]);
            let rank = linalg::rank(&tensor_matrix(&d, field), field);
            let witness = d
                .iter()
                .find(|(k, c)| square.coeff(k) != Some(*c))
                .map(|(k, c)| {
                    let mut t = super::Tensor2::zero();
                    t.add_term(*k, c.clone(), field);
                    h.render_tensor(&t)
                });
            CheckItem::with_pass(
                format!("Delta({name})"),
                "not x (x) x, rank >= 2".into(),
                format!("rank {rank}, witness {}", witness.as_deref().unwrap_or("none")),
                rank >= 2 && d != square,
            )
        })
        .collect();
    Report::new(format!("group-like non-members, degree <= {bound}"), items)
}

/// `J^(ij) J^(ji) J^(ij) = J^(ij)` for `0 <= i, j <= bound`, closure of the
/// set `{K^i Kb^j}` under products, and `1` as the identity.
pub fn regular_monoid_check<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Report {
    let a = h.alg();
    let mut items = Vec::new();
    let pairs: Vec<(u32, u32)> = (0..=bound)
        .flat_map(|i| (0..=bound).map(move |j| (i, j)))
        .collect();
    for &(i, j) in &pairs {
        let x = a.monomial(reduce_j_power(i, j));
        let y = a.monomial(reduce_j_power(j, i));
        let got = a.mul_all([&x, &y, &x]);
        items.push(CheckItem::new(
            format!("J({i},{j}) J({j},{i}) J({i},{j})"),
            h.render(&x),
            h.render(&got),
        ));
        let one = a.one();
        items.push(CheckItem::new(format!("1 J({i},{j}) = J({i},{j}) 1 = J({i},{j})"), h.render(&x), {
            let l = a.mul(&one, &x);
            let r = a.mul(&x, &one);
            if l == r { h.render(&l) } else { format!("{} / {}", h.render(&l), h.render(&r)) }
        }));
    }
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let p = a.mul(&a.monomial(reduce_j_power(i, j)), &a.monomial(reduce_j_power(k, l)));
            let expected = reduce_j_power(i + k, j + l);
            let is_member = p.as_single().is_some_and(|(m, c)| {
                h.field().is_one(c) && matches!(m.tail, Tail::One | Tail::J | Tail::K(_) | Tail::Kb(_)) && m.e + m.f == 0
            });
            items.push(CheckItem::with_pass(
                format!("J({i},{j}) J({k},{l})"),
                expected.render(Flavor::W),
                h.render(&p),
                is_member && p == a.monomial(expected),
            ));
        }
    }
    Report::new(format!("regular monoid of group-likes, powers <= {bound}"), items)
}
