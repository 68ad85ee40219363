//! Exact Gaussian elimination over a [`ScalarField`].

use crate::coeff::ScalarField;

/// Row-reduces `m` in place and returns the pivot columns.
pub fn row_reduce<F: ScalarField>(m: &mut [Vec<F::Elem>], field: &F) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for v in m[r][c..].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !field.is_zero(p) {
                    *v = field.sub(v, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: ScalarField>(m: &[Vec<F::Elem>], field: &F) -> usize {
    let mut m = m.to_vec();
    row_reduce(&mut m, field).len()
}

/// Solves `a x = b`. Returns `None` if the system is inconsistent; free
/// variables are set to zero. The second component is the nullity.
pub fn solve<F: ScalarField>(
    a: &[Vec<F::Elem>],
    b: &[F::Elem],
    field: &F,
) -> Option<(Vec<F::Elem>, usize)> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut m, field);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some((x, cols - pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CyclotomicField, GenericField};

    #[test]
    fn rank_and_solve_over_q_of_q() {
        let g = GenericField;
        let q = g.q_pow(1);
        let one = g.one();
        let m = vec![
            vec![one.clone(), q.clone()],
            vec![q.clone(), g.mul(&q, &q)],
        ];
        assert_eq!(rank(&m, &g), 1);
        let a = vec![vec![one.clone(), q.clone()], vec![one.clone(), g.neg(&q)]];
        let b = vec![g.from_int(2), g.zero()];
        let (x, nullity) = solve(&a, &b, &g).unwrap();
        assert_eq!(nullity, 0);
        assert!(g.is_one(&x[0]));
        assert_eq!(x[1], g.inv(&q).unwrap());
    }

    #[test]
    fn inconsistent_system() {
        let c = CyclotomicField::new(3).unwrap();
        let a = vec![vec![c.one()], vec![c.one()]];
        let b = vec![c.one(), c.zero()];
        assert!(solve(&a, &b, &c).is_none());
    }
}
