use std::fmt;

use serde::{Deserialize, Serialize};

/// Generators of `wsl_q(2)` as letters of a word. `Kb` is the regular
/// partner of `K` and `J = K Kb`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    E,
    F,
    K,
    Kb,
    J,
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::E => "E",
            Gen::F => "F",
            Gen::K => "K",
            Gen::Kb => "Kb",
            Gen::J => "J",
        }
    }
}

/// The group-like part of a PBW monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tail {
    One,
    J,
    /// `K^l`, `l >= 1`.
    K(u32),
    /// `Kb^m`, `m >= 1`.
    Kb(u32),
}

impl Tail {
    /// Normal form of `K^i Kb^j`.
    pub fn from_powers(i: u32, j: u32) -> Tail {
        use std::cmp::Ordering::*;
        match (i.cmp(&j), i) {
            (Equal, 0) => Tail::One,
            (Equal, _) => Tail::J,
            (Greater, _) => Tail::K(i - j),
            (Less, _) => Tail::Kb(j - i),
        }
    }

    pub fn degree(self) -> u32 {
        match self {
            Tail::One => 0,
            Tail::J => 1,
            Tail::K(l) | Tail::Kb(l) => l,
        }
    }

    pub fn word(self) -> Vec<Gen> {
        match self {
            Tail::One => vec![],
            Tail::J => vec![Gen::J],
            Tail::K(l) => vec![Gen::K; l as usize],
            Tail::Kb(m) => vec![Gen::Kb; m as usize],
        }
    }
}

/// PBW basis element `E^e F^f tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub e: u32,
    pub f: u32,
    pub tail: Tail,
}

/// How a monomial is displayed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Flavor {
    #[default]
    W,
    /// Sandwiched generators `Eh = J E J`, `Fh = J F J`; a trailing `J` is
    /// absorbed into them.
    V,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        e: 0,
        f: 0,
        tail: Tail::One,
    };
    pub const J: Monomial = Monomial {
        e: 0,
        f: 0,
        tail: Tail::J,
    };

    pub fn new(e: u32, f: u32, tail: Tail) -> Self {
        Monomial { e, f, tail }
    }

    pub fn tail(tail: Tail) -> Self {
        Monomial { e: 0, f: 0, tail }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// `e + f + deg(tail)`, with `J` counting as one letter.
    pub fn degree(&self) -> u32 {
        self.e + self.f + self.tail.degree()
    }

    pub fn word(&self) -> Vec<Gen> {
        let mut w = vec![Gen::E; self.e as usize];
        w.extend(std::iter::repeat_n(Gen::F, self.f as usize));
        w.extend(self.tail.word());
        w
    }

    /// Reads an irreducible word `E^e F^f (K^l | Kb^m | J | empty)`.
    pub fn from_normal_word(w: &[Gen]) -> Option<Self> {
        let e = w.iter().take_while(|&&g| g == Gen::E).count();
        let f = w[e..].iter().take_while(|&&g| g == Gen::F).count();
        let rest = &w[e + f..];
        let tail = match rest {
            [] => Tail::One,
            [Gen::J] => Tail::J,
            [Gen::K, ..] if rest.iter().all(|&g| g == Gen::K) => Tail::K(rest.len() as u32),
            [Gen::Kb, ..] if rest.iter().all(|&g| g == Gen::Kb) => Tail::Kb(rest.len() as u32),
            _ => return None,
        };
        Some(Monomial::new(e as u32, f as u32, tail))
    }

    /// Whether the monomial lies in the span of sandwiched words, i.e. is
    /// `1` or carries a `K`, `Kb` or `J` tail.
    pub fn is_sandwiched(&self) -> bool {
        self.is_one() || self.tail != Tail::One
    }

    pub fn render(&self, flavor: Flavor) -> String {
        let (en, fname) = match flavor {
            Flavor::W => ("E", "F"),
            Flavor::V => ("Eh", "Fh"),
        };
        let mut parts = Vec::new();
        let pw = |name: &str, k: u32| {
            if k == 1 {
                name.to_string()
            } else {
                format!("{name}^{k}")
            }
        };
        if self.e > 0 {
            parts.push(pw(en, self.e));
        }
        if self.f > 0 {
            parts.push(pw(fname, self.f));
        }
        let absorbed = flavor == Flavor::V && self.e + self.f > 0;
        match self.tail {
            Tail::One => {}
            Tail::J if absorbed => {}
            Tail::J => parts.push("J".into()),
            Tail::K(l) => parts.push(pw("K", l)),
            Tail::Kb(m) => parts.push(pw("Kb", m)),
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// All monomials of total degree at most `bound`, in canonical order.
    pub fn up_to_degree(bound: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for e in 0..=bound {
            for f in 0..=bound - e {
                let rest = bound - e - f;
                out.push(Monomial::new(e, f, Tail::One));
                if rest >= 1 {
                    out.push(Monomial::new(e, f, Tail::J));
                }
                for l in 1..=rest {
                    out.push(Monomial::new(e, f, Tail::K(l)));
                    out.push(Monomial::new(e, f, Tail::Kb(l)));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Flavor::W))
    }
}

/// `K^i Kb^j` collapsed to `K^(i-j)`, `J`, `Kb^(j-i)` or `1`.
pub fn reduce_j_power(i: u32, j: u32) -> Monomial {
    Monomial::tail(Tail::from_powers(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_powers() {
        assert_eq!(reduce_j_power(2, 1), Monomial::tail(Tail::K(1)));
        assert_eq!(reduce_j_power(3, 3), Monomial::J);
        assert_eq!(reduce_j_power(0, 0), Monomial::ONE);
        assert_eq!(reduce_j_power(1, 3), Monomial::tail(Tail::Kb(2)));
    }

    #[test]
    fn rendering() {
        let m = Monomial::new(2, 1, Tail::Kb(3));
        assert_eq!(m.to_string(), "E^2*F*Kb^3");
        assert_eq!(Monomial::new(1, 1, Tail::J).render(Flavor::V), "Eh*Fh");
        assert_eq!(Monomial::J.render(Flavor::V), "J");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn normal_words_round_trip() {
        for m in Monomial::up_to_degree(4) {
            assert_eq!(Monomial::from_normal_word(&m.word()), Some(m));
        }
        assert_eq!(Monomial::from_normal_word(&[Gen::F, Gen::E]), None);
        assert_eq!(Monomial::from_normal_word(&[Gen::K, Gen::J]), None);
    }

    #[test]
    fn degree_enumeration_is_complete() {
        // count by hand: degree <= 1 gives 1, J, K, Kb, E, F
        assert_eq!(Monomial::up_to_degree(1).len(), 6);
        assert!(Monomial::up_to_degree(4).iter().all(|m| m.degree() <= 4));
    }
}
