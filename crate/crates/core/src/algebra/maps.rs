//! Concrete maps between the presentations: the weak Cartan involutions,
//! the sandwiching map, the five-generator comparison map, and a deliberately
//! broken substitution used as a negative control.

use crate::coeff::ScalarField;

use super::engine::WAlgebra;
use super::free::Symbol;
use super::monomial::{Flavor, Gen};
use super::morphism::{MorphismKind, MorphismSpec};

type Spec<F> = MorphismSpec<<F as ScalarField>::Elem>;

fn sym<F: ScalarField>(alg: &WAlgebra<F>, s: Symbol) -> crate::algebra::Element<F::Elem> {
    alg.symbol(s).expect("symbol has an image in wsl_q(2)")
}

/// The identity on every symbol that has a value in the engine.
pub fn identity<F: ScalarField>(alg: &WAlgebra<F>, flavor: Flavor) -> Spec<F> {
    use Symbol::*;
    let mut m = MorphismSpec::new("id", MorphismKind::Morphism, flavor, flavor);
    for s in [E, F, K, Kb, J, Eh, Fh, L] {
        m = m.image(s, sym(alg, s));
    }
    m
}

/// `E <-> F`, `K <-> Kb`.
pub fn omega_w<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    MorphismSpec::new("omega_w", MorphismKind::Morphism, Flavor::W, Flavor::W)
        .image(Symbol::E, alg.gen(Gen::F))
        .image(Symbol::F, alg.gen(Gen::E))
        .image(Symbol::K, alg.gen(Gen::Kb))
        .image(Symbol::Kb, alg.gen(Gen::K))
}

/// `Ev <-> Fv`, `K <-> Kb` on `vsl_q(2)`, with targets in the sandwiched model.
pub fn omega_v<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    MorphismSpec::new("omega_v", MorphismKind::Morphism, Flavor::V, Flavor::V)
        .image(Symbol::Ev, sym(alg, Symbol::Fh))
        .image(Symbol::Fv, sym(alg, Symbol::Eh))
        .image(Symbol::Eh, sym(alg, Symbol::Fh))
        .image(Symbol::Fh, sym(alg, Symbol::Eh))
        .image(Symbol::K, alg.gen(Gen::Kb))
        .image(Symbol::Kb, alg.gen(Gen::K))
}

/// `X -> J X J` on the `w` generators; the images obey the `w` relations.
pub fn chi<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    MorphismSpec::new("chi", MorphismKind::Morphism, Flavor::W, Flavor::V)
        .image(Symbol::E, sym(alg, Symbol::Eh))
        .image(Symbol::F, sym(alg, Symbol::Fh))
        .image(Symbol::K, alg.gen(Gen::K))
        .image(Symbol::Kb, alg.gen(Gen::Kb))
}

/// `Ev -> J E J`, `Fv -> J F J`: the sandwiched model of `vsl_q(2)`.
pub fn sandwich_model<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    MorphismSpec::new("sandwich", MorphismKind::Morphism, Flavor::V, Flavor::V)
        .image(Symbol::Ev, sym(alg, Symbol::Eh))
        .image(Symbol::Fv, sym(alg, Symbol::Fh))
        .image(Symbol::K, alg.gen(Gen::K))
        .image(Symbol::Kb, alg.gen(Gen::Kb))
}

/// From the five-generator presentation: identity on `E, F, K, Kb` and
/// `L -> [E, F]`.
pub fn psi_w<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    let e = alg.gen(Gen::E);
    let f = alg.gen(Gen::F);
    MorphismSpec::new("psi_w", MorphismKind::Morphism, Flavor::W, Flavor::W)
        .image(Symbol::E, e.clone())
        .image(Symbol::F, f.clone())
        .image(Symbol::K, alg.gen(Gen::K))
        .image(Symbol::Kb, alg.gen(Gen::Kb))
        .image(Symbol::L, alg.commutator(&e, &f))
}

/// Into the five-generator presentation: identity on `E, F, K, Kb`. The
/// target is evaluated by eliminating `L` through its defining relation
/// `(q - q^-1) L = K - Kb`.
pub fn phi_w<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    MorphismSpec::new("phi_w", MorphismKind::Morphism, Flavor::W, Flavor::W)
        .image(Symbol::E, alg.gen(Gen::E))
        .image(Symbol::F, alg.gen(Gen::F))
        .image(Symbol::K, alg.gen(Gen::K))
        .image(Symbol::Kb, alg.gen(Gen::Kb))
        .image(Symbol::L, sym(alg, Symbol::L))
}

/// `E <-> K`: not a morphism, kept as a negative control.
pub fn swap_e_k<F: ScalarField>(alg: &WAlgebra<F>) -> Spec<F> {
    MorphismSpec::new("swap(E,K)", MorphismKind::Morphism, Flavor::W, Flavor::W)
        .image(Symbol::E, alg.gen(Gen::K))
        .image(Symbol::K, alg.gen(Gen::E))
        .image(Symbol::F, alg.gen(Gen::F))
        .image(Symbol::Kb, alg.gen(Gen::Kb))
}
