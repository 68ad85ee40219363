//! Tensor powers of an algebra with a distinguished basis. A rank-`N`
//! tensor is a linear combination of `N`-tuples of basis labels, and
//! products are taken factor by factor.

use std::fmt::Debug;
use std::hash::Hash;

use crate::coeff::ScalarField;
use crate::lin::{join_terms, render_term, Lin};

/// An algebra presented by structure constants on a basis.
pub trait BasisAlgebra: Sync {
    type Field: ScalarField;
    type Key: Ord + Copy + Hash + Debug + Send + Sync;

    fn field(&self) -> &Self::Field;
    fn mul_basis(&self, a: &Self::Key, b: &Self::Key) -> Lin<Self::Key, Elem<Self>>;
    fn render_key(&self, k: &Self::Key) -> String;
}

pub type Elem<A> = <<A as BasisAlgebra>::Field as ScalarField>::Elem;
pub type Tensor<A, const N: usize> = Lin<[<A as BasisAlgebra>::Key; N], Elem<A>>;

/// `x1 ⊗ ... ⊗ xN` for linear combinations `xi`.
pub fn outer<A: BasisAlgebra, const N: usize>(
    alg: &A,
    legs: [&Lin<A::Key, Elem<A>>; N],
) -> Tensor<A, N> {
    let field = alg.field();
    let mut out: Tensor<A, N> = Lin::zero();
    if legs.iter().any(|l| l.is_zero()) {
        return out;
    }
    let mut iters: Vec<Vec<(&A::Key, &Elem<A>)>> = legs.iter().map(|l| l.iter().collect()).collect();
    let mut idx = [0usize; N];
    loop {
        let mut key = [*iters[0][0].0; N];
        let mut c = field.one();
        for n in 0..N {
            let (k, v) = iters[n][idx[n]];
            key[n] = *k;
            c = field.mul(&c, v);
        }
        out.add_term(key, c, field);
        // odometer increment
        let mut n = N;
        loop {
            if n == 0 {
                iters.clear();
                return out;
            }
            n -= 1;
            idx[n] += 1;
            if idx[n] < iters[n].len() {
                break;
            }
            idx[n] = 0;
        }
    }
}

/// Factor-wise product of two rank-`N` tensors.
pub fn mul<A: BasisAlgebra, const N: usize>(alg: &A, x: &Tensor<A, N>, y: &Tensor<A, N>) -> Tensor<A, N> {
    let field = alg.field();
    let mut out = Lin::zero();
    for (ka, ca) in x {
        for (kb, cb) in y {
            let legs: Vec<Lin<A::Key, Elem<A>>> =
                (0..N).map(|n| alg.mul_basis(&ka[n], &kb[n])).collect();
            let refs: [&Lin<A::Key, Elem<A>>; N] = std::array::from_fn(|n| &legs[n]);
            let prod = outer(alg, refs);
            out.add_scaled(&prod, &field.mul(ca, cb), field);
        }
    }
    out
}

/// Places the legs of a rank-2 tensor at positions `at` of a rank-3 tensor,
/// filling the remaining slot with `unit`.
pub fn embed3<A: BasisAlgebra>(
    alg: &A,
    x: &Tensor<A, 2>,
    at: [usize; 2],
    unit: A::Key,
) -> Tensor<A, 3> {
    assert!(at[0] < 3 && at[1] < 3 && at[0] != at[1]);
    x.map_keys(alg.field(), |k| {
        let mut key = [unit; 3];
        key[at[0]] = k[0];
        key[at[1]] = k[1];
        key
    })
}

/// Exchanges the two legs.
pub fn flip<A: BasisAlgebra>(alg: &A, x: &Tensor<A, 2>) -> Tensor<A, 2> {
    x.map_keys(alg.field(), |k| [k[1], k[0]])
}

pub fn render<A: BasisAlgebra, const N: usize>(alg: &A, x: &Tensor<A, N>) -> String {
    render_with(x, alg.field(), |k| alg.render_key(k))
}

/// Renders `c*[a ⊗ b]` terms with a caller-supplied label for each leg.
pub fn render_with<F: ScalarField, K: Ord + Clone, const N: usize>(
    x: &Lin<[K; N], F::Elem>,
    field: &F,
    mut label: impl FnMut(&K) -> String,
) -> String {
    join_terms(x.iter().map(|(k, c)| {
        let legs: Vec<String> = k.iter().map(&mut label).collect();
        render_term(c, &format!("[{}]", legs.join(" ⊗ ")), field)
    }))
}

