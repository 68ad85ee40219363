use super::field::ScalarField;
use super::CoeffError;

/// `[m] = (q^m - q^-m) / (q - q^-1)`, computed as `q^(m-1) + q^(m-3) + ... + q^(1-m)`.
pub fn quantum_int<F: ScalarField>(m: i64, field: &F) -> F::Elem {
    let n = m.unsigned_abs() as i64;
    let mut acc = field.zero();
    for k in 0..n {
        acc = field.add(&acc, &field.q_pow(n - 1 - 2 * k));
    }
    if m < 0 {
        field.neg(&acc)
    } else {
        acc
    }
}

/// `[k]! = [1][2]...[k]`. Fails with `DivisorVanishes` when the product is
/// zero, which happens in `Q(zeta_d)` exactly when `k >= d`.
pub fn quantum_factorial<F: ScalarField>(k: u32, field: &F) -> Result<F::Elem, CoeffError> {
    let mut acc = field.one();
    for m in 1..=k as i64 {
        acc = field.mul(&acc, &quantum_int(m, field));
    }
    if field.is_zero(&acc) {
        return Err(CoeffError::DivisorVanishes(k));
    }
    Ok(acc)
}

/// `q - q^-1`.
pub fn q_minus_q_inv<F: ScalarField>(field: &F) -> F::Elem {
    field.sub(&field.q_pow(1), &field.q_pow(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CyclotomicField, GenericField};

    #[test]
    fn small_quantum_integers() {
        let g = GenericField;
        assert!(g.is_one(&quantum_int(1, &g)));
        assert_eq!(quantum_int(2, &g).to_string(), "q + q^-1");
        assert_eq!(quantum_int(-2, &g).to_string(), "-q - q^-1");
        assert!(g.is_zero(&quantum_int(0, &g)));
        let c3 = CyclotomicField::new(3).unwrap();
        assert!(c3.is_zero(&quantum_int(3, &c3)));
    }

    #[test]
    fn matches_closed_form() {
        let g = GenericField;
        for m in -6..=6 {
            let closed = g
                .div(&g.sub(&g.q_pow(m), &g.q_pow(-m)), &q_minus_q_inv(&g))
                .unwrap();
            assert_eq!(quantum_int(m, &g), closed);
        }
    }

    #[test]
    fn factorials() {
        let g = GenericField;
        assert!(g.is_one(&quantum_factorial(0, &g).unwrap()));
        assert_eq!(quantum_factorial(2, &g).unwrap().to_string(), "q + q^-1");
        let c3 = CyclotomicField::new(3).unwrap();
        assert_eq!(quantum_factorial(2, &c3).unwrap(), c3.from_int(-1));
        assert_eq!(quantum_factorial(3, &c3), Err(CoeffError::DivisorVanishes(3)));
    }
}
