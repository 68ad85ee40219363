//! Finite linear combinations `sum c_k * k` over a scalar field, keyed by any
//! ordered basis label. Zero coefficients are never stored.

use std::collections::btree_map::{self, BTreeMap, Entry};

use crate::coeff::ScalarField;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lin<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord, S> Default for Lin<K, S> {
    fn default() -> Self {
        Lin {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, S: Clone> Lin<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term<F: ScalarField<Elem = S>>(k: K, c: S, field: &F) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c, field);
        out
    }

    pub fn basis<F: ScalarField<Elem = S>>(k: K, field: &F) -> Self {
        Self::term(k, field.one(), field)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, S> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> Option<&S> {
        self.terms.get(k)
    }

    /// The single `(key, coefficient)` pair if there is exactly one term.
    pub fn as_single(&self) -> Option<(&K, &S)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term<F: ScalarField<Elem = S>>(&mut self, k: K, c: S, field: &F) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = field.add(o.get(), &c);
                if field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled<F: ScalarField<Elem = S>>(&mut self, other: &Self, c: &S, field: &F) {
        if field.is_zero(c) {
            return;
        }
        let unit = field.is_one(c);
        for (k, v) in &other.terms {
            let v = if unit { v.clone() } else { field.mul(v, c) };
            self.add_term(k.clone(), v, field);
        }
    }

    pub fn add<F: ScalarField<Elem = S>>(&self, other: &Self, field: &F) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &field.one(), field);
        out
    }

    pub fn sub<F: ScalarField<Elem = S>>(&self, other: &Self, field: &F) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &field.from_int(-1), field);
        out
    }

    pub fn scale<F: ScalarField<Elem = S>>(&self, c: &S, field: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c, field);
        out
    }

    pub fn neg<F: ScalarField<Elem = S>>(&self, field: &F) -> Self {
        Lin {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), field.neg(v)))
                .collect(),
        }
    }

    /// Linear extension of `f`, which maps a basis label to a combination
    /// over a possibly different basis.
    pub fn map_linear<K2, G, F>(&self, field: &F, mut f: G) -> Lin<K2, S>
    where
        K2: Ord + Clone,
        F: ScalarField<Elem = S>,
        G: FnMut(&K) -> Lin<K2, S>,
    {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c, field);
        }
        out
    }

    /// Fallible [`Lin::map_linear`].
    pub fn try_map_linear<K2, G, F, E>(&self, field: &F, mut f: G) -> Result<Lin<K2, S>, E>
    where
        K2: Ord + Clone,
        F: ScalarField<Elem = S>,
        G: FnMut(&K) -> Result<Lin<K2, S>, E>,
    {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c, field);
        }
        Ok(out)
    }

    /// Maps a key type, merging keys that collide.
    pub fn map_keys<K2, G, F>(&self, field: &F, mut f: G) -> Lin<K2, S>
    where
        K2: Ord + Clone,
        F: ScalarField<Elem = S>,
        G: FnMut(&K) -> K2,
    {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone(), field);
        }
        out
    }
}

impl<K: Ord, S> IntoIterator for Lin<K, S> {
    type Item = (K, S);
    type IntoIter = btree_map::IntoIter<K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, S> IntoIterator for &'a Lin<K, S> {
    type Item = (&'a K, &'a S);
    type IntoIter = btree_map::Iter<'a, K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Renders a scalar coefficient and a basis label as one signed term, so
/// that `(c, label)` pairs can be joined with [`join_terms`].
pub(crate) fn render_term<F: ScalarField>(c: &F::Elem, label: &str, field: &F) -> (bool, String) {
    let text = c.to_string();
    let negative_form = text.starts_with('-') || text.starts_with("(-");
    let (neg, text) = if negative_form {
        let flipped = field.neg(c).to_string();
        if flipped.starts_with('-') || flipped.starts_with("(-") {
            (false, text)
        } else {
            (true, flipped)
        }
    } else {
        (false, text)
    };
    let compound = text.contains(" + ") || text.contains(" - ");
    let body = if label == "1" {
        if compound && !text.starts_with('(') {
            format!("({text})")
        } else {
            text
        }
    } else if text == "1" {
        label.to_string()
    } else if compound && !text.starts_with('(') {
        format!("({text})*{label}")
    } else {
        format!("{text}*{label}")
    };
    (neg, body)
}

pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (idx, (neg, body)) in terms.into_iter().enumerate() {
        match (idx, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
