//! A small test ring shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use weakq::ore::*;

/// `Q[x]` with `alpha(p)(x) = p(2x)` and the Jackson derivative
/// `delta(p) = (p(2x) - p(x)) / x`.
pub struct QPoly;

pub type P = Vec<BigRational>;

pub fn trim(mut p: P) -> P {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Ring for QPoly {
    type Elem = P;
    fn zero(&self) -> P {
        vec![]
    }
    fn one(&self) -> P {
        vec![rat(1)]
    }
    fn add(&self, a: &P, b: &P) -> P {
        let n = a.len().max(b.len());
        trim((0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
            .collect())
    }
    fn neg(&self, a: &P) -> P {
        a.iter().map(|c| -c).collect()
    }
    fn mul(&self, a: &P, b: &P) -> P {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }
    fn is_zero(&self, a: &P) -> bool {
        a.is_empty()
    }
    fn render(&self, a: &P) -> String {
        format!("{a:?}")
    }
}

pub fn scale_powers(p: &P, base: &BigRational) -> P {
    let mut s = BigRational::one();
    p.iter()
        .map(|c| {
            let v = c * &s;
            s *= base;
            v
        })
        .collect()
}

pub fn jackson() -> OreExt<QPoly> {
    let two = rat(2);
    let half = BigRational::new(1.into(), 2.into());
    let t2 = two.clone();
    let ops = EndoPair::new(
        move |p: &P| scale_powers(p, &two),
        move |p: &P| {
            // (p(2x) - p(x)) / x drops the constant term
            let d: P = scale_powers(p, &t2).iter().zip(p).map(|(a, b)| a - b).collect();
            trim(d.into_iter().skip(1).collect())
        },
    )
    .with_inverse(move |p: &P| scale_powers(p, &half));
    OreExt::new(QPoly, ops, "t")
}

pub fn poly(cs: &[i64]) -> P {
    trim(cs.iter().map(|&c| rat(c)).collect())
}

/// Sum over every word with `k` deltas and `n - k` alphas.
pub fn snk_brute(ext: &OreExt<QPoly>, n: usize, k: usize, a: &P) -> P {
    let ops = ext.ops();
    let mut total = QPoly.zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut x = a.clone();
        for bit in 0..n {
            x = if mask >> bit & 1 == 1 { (ops.delta)(&x) } else { (ops.alpha)(&x) };
        }
        total = QPoly.add(&total, &x);
    }
    total
}
