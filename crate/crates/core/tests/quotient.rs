use std::collections::BTreeMap;

use weakq::coeff::{parse_scalar, specialize, CoeffError, Cyclotomic, ScalarField};
use weakq::error::Error;
use weakq::lin::Lin;
use weakq::linalg;
use weakq::quotient::*;
use weakq::tensor;

fn key(e: u32, f: u32, t: u32) -> QKey {
    QKey::new(e, f, t)
}

#[test]
fn dimension_and_decomposition() {
    let q = build_quotient(3).unwrap();
    assert_eq!(q.dim(), 36);
    assert_eq!(q.w_basis().len(), 27);
    assert_eq!(build_quotient(5).unwrap().dim(), 150);
}

#[test]
fn rejects_bad_orders() {
    assert_eq!(build_quotient(4).unwrap_err(), CoeffError::InvalidOrder(4));
    assert_eq!(build_quotient(1).unwrap_err(), CoeffError::InvalidOrder(1));
    assert!(matches!(RSystem::new(6), Err(Error::Coeff(CoeffError::InvalidOrder(6)))));
}

#[test]
fn ideal_relations() {
    let q = build_quotient(3).unwrap();
    let show = |t: &str| q.render(&q.parse(t).unwrap());
    assert_eq!(show("K*K^2"), "J");
    assert_eq!(show("E^2*E"), "0");
    assert_eq!(show("F^3"), "0");
    assert_eq!(show("Kb"), "K^2");
    assert_eq!(show("K^4"), "K");
    assert_eq!(show("Kb*K"), "J");
}

#[test]
fn w_is_an_ideal_with_unit_j() {
    let q = build_quotient(3).unwrap();
    let j = q.j_key();
    for a in q.basis() {
        for b in q.w_basis() {
            for p in [q.mul_keys(&a, &b), q.mul_keys(&b, &a)] {
                assert!(p.keys().all(QKey::in_w), "{a:?} {b:?}");
            }
        }
    }
    for b in q.w_basis() {
        assert_eq!(q.mul_keys(&j, &b), q.basis_elem(b));
        assert_eq!(q.mul_keys(&b, &j), q.basis_elem(b));
    }
}

#[test]
fn quotient_product_is_associative() {
    let q = build_quotient(3).unwrap();
    let basis = q.basis();
    for (n, a) in basis.iter().enumerate().step_by(5) {
        for b in basis.iter().skip(n % 3).step_by(4) {
            for c in basis.iter().skip(n % 2).step_by(7) {
                let (x, y, z) = (q.basis_elem(*a), q.basis_elem(*b), q.basis_elem(*c));
                assert_eq!(q.mul(&q.mul(&x, &y), &z), q.mul(&x, &q.mul(&y, &z)));
            }
        }
    }
}

#[test]
fn r_matrix_terms() {
    let q = build_quotient(3).unwrap();
    let f = q.field();
    let r = build_r(&q).unwrap();
    assert_eq!(r.len(), 27);

    let third = f.div(&f.one(), &f.from_int(3)).unwrap();
    assert_eq!(r.coeff(&[q.j_key(), q.j_key()]), Some(&third));

    let qq = f.sub(&f.q_pow(1), &f.q_pow(-1));
    let expected = f.mul(&f.mul(&third, &qq), &f.q_pow(-2));
    assert_eq!(r.coeff(&[key(1, 0, 1), key(0, 1, 1)]), Some(&expected));
}

#[test]
fn r_tilde_matches_r() {
    let q = build_quotient(3).unwrap();
    let r = build_r(&q).unwrap();
    let rt = build_r_tilde(&q).unwrap();
    assert_eq!(rt.len(), 27);
    assert_eq!(rt, r);
    let f = q.field();
    let third = f.div(&f.one(), &f.from_int(3)).unwrap();
    assert_eq!(rt.coeff(&[q.j_key(), q.j_key()]), Some(&third));
}

/// `R X = J (x) J` solved densely on the whole degree-0 part of `W (x) W`.
fn dense_rhat(q: &QuotientAlgebra, r: &QTensor<2>) -> (QTensor<2>, usize, usize) {
    let f = q.field();
    let w = q.w_basis();
    let unknowns: Vec<[QKey; 2]> = w
        .iter()
        .flat_map(|u| w.iter().map(move |v| [*u, *v]))
        .filter(|[u, v]| u.grade() + v.grade() == 0)
        .collect();
    let row: BTreeMap<[QKey; 2], usize> = unknowns.iter().enumerate().map(|(n, k)| (*k, n)).collect();
    let n = unknowns.len();
    let mut a = vec![vec![f.zero(); n]; n];
    for (col, u) in unknowns.iter().enumerate() {
        for (k, c) in &tensor::mul(q, r, &Lin::basis(*u, f)) {
            a[row[k]][col] = c.clone();
        }
    }
    let mut b = vec![f.zero(); n];
    b[row[&[q.j_key(), q.j_key()]]] = f.one();
    let (x, nullity) = linalg::solve(&a, &b, f).expect("consistent");
    let mut out = Lin::zero();
    for (k, c) in unknowns.iter().zip(x) {
        out.add_term(*k, c, f);
    }
    (out, n, nullity)
}

#[test]
fn rhat_agrees_with_dense_solve() {
    let s = RSystem::new(3).unwrap();
    let (dense, unknowns, nullity) = dense_rhat(s.algebra(), s.r());
    assert_eq!(unknowns, 171);
    assert_eq!(nullity, 0);
    assert_eq!(s.rhat().unwrap(), &dense);
}

#[test]
fn all_suites_pass_for_d3() {
    let s = RSystem::new(3).unwrap();
    for suite in RSuite::ALL {
        for c in s.run(suite).unwrap() {
            assert!(c.pass, "{}", c.to_text());
        }
    }
}

#[test]
fn regular_suite_contents() {
    let s = RSystem::new(3).unwrap();
    let checks = s.check_regular().unwrap();
    let witness = checks.iter().find(|c| c.check.contains("!=")).unwrap();
    assert!(!witness.equal && witness.pass);
    assert!(checks.iter().filter(|c| c.check.starts_with("rrr")).all(|c| c.equal));
}

#[test]
fn qybe_holds_for_d5() {
    let s = RSystem::new(5).unwrap();
    let c = s.check_qybe();
    assert!(c.equal, "{}", c.to_text());
    assert_eq!(c.lhs_terms, c.rhs_terms);
}

#[test]
fn leg_embedding_puts_j_in_the_spare_leg() {
    let s = RSystem::new(3).unwrap();
    let j = s.algebra().j_key();
    assert!(s.leg([0, 2]).keys().all(|k| k[1] == j));
    assert!(s.leg([1, 2]).keys().all(|k| k[0] == j));
    assert_eq!(s.leg([0, 1]).len(), 27);
}

#[test]
fn j_tensor_j_solves_qybe() {
    let q = build_quotient(3).unwrap();
    let j = q.j_key();
    let jj: QTensor<2> = Lin::basis([j, j], q.field());
    let legs: Vec<QTensor<3>> = [[0, 1], [0, 2], [1, 2]].iter().map(|at| tensor::embed3(&q, &jj, *at, j)).collect();
    let lhs = tensor::mul(&q, &tensor::mul(&q, &legs[0], &legs[1]), &legs[2]);
    let rhs = tensor::mul(&q, &tensor::mul(&q, &legs[2], &legs[1]), &legs[0]);
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.len(), 1);
}

#[test]
fn intertwining_on_k_is_commutation() {
    let s = RSystem::new(3).unwrap();
    let checks = s.check_intertwine();
    let k = checks.iter().find(|c| c.check.ends_with("= K")).unwrap();
    assert!(k.equal);
    assert_eq!(k.lhs_terms, 27);
}

#[test]
fn export_json_round_trips() {
    let s = RSystem::new(3).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&s.export("json").unwrap()).unwrap();
    let records = doc["r"].as_array().unwrap();
    assert_eq!(records.len(), 27);
    assert!(doc.get("rhat").is_none());

    let idx: Vec<(u64, u64, u64)> = records
        .iter()
        .map(|r| (r["k"].as_u64().unwrap(), r["i"].as_u64().unwrap(), r["j"].as_u64().unwrap()))
        .collect();
    let mut sorted = idx.clone();
    sorted.sort();
    assert_eq!(idx, sorted);

    let terms = r_terms(s.algebra()).unwrap();
    let ctx = s.algebra().field().ctx().clone();
    for (rec, t) in records.iter().zip(&terms) {
        let text = rec["coefficient"].as_str().unwrap();
        let back: Cyclotomic = specialize(&parse_scalar(text).unwrap(), &ctx).unwrap();
        assert_eq!(back, t.coefficient, "{text}");
    }
    assert_eq!(records[0]["basis"], serde_json::json!(["K", "K"]));
    assert_eq!(records[26]["basis"], serde_json::json!(["E^2*J", "F^2*J"]));
}

#[test]
fn export_includes_rhat_once_computed() {
    let s = RSystem::new(3).unwrap();
    s.rhat().unwrap();
    let doc: serde_json::Value = serde_json::from_str(&s.export("json").unwrap()).unwrap();
    assert_eq!(doc["rhat"].as_array().unwrap().len(), 27);
    assert!(s.export("text").unwrap().starts_with("R, d = 3, 27 terms"));
    assert_eq!(s.export("xml").unwrap_err(), Error::UnsupportedFormat("xml".into()));
}
