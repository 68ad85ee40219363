//! WebAssembly bindings for the browser page in `www/`.

use std::sync::Arc;

use wasm_bindgen::prelude::*;
use weakq::algebra::{parse, render, Flavor, WAlgebra};
use weakq::coeff::{CyclotomicField, GenericField, ScalarField};
use weakq::hopf::Hopf;
use weakq::quotient::{RSuite, RSystem};

fn flavor(name: &str) -> Result<Flavor, String> {
    match name {
        "w" => Ok(Flavor::W),
        "v" => Ok(Flavor::V),
        other => Err(format!("unknown flavor `{other}`")),
    }
}

enum Op {
    Normalize,
    Coproduct,
}

fn run<F: ScalarField>(field: F, op: Op, expr: &str, fl: Flavor) -> Result<String, String> {
    let alg = Arc::new(WAlgebra::new(field.clone()));
    let x = parse(expr, fl, &field).map_err(|e| e.to_string())?;
    let nf = match fl {
        Flavor::W => alg.normalize(&x),
        Flavor::V => alg.normalize_v(&x),
    }
    .map_err(|e| e.to_string())?;
    match op {
        Op::Normalize => Ok(render(&nf, fl, &field)),
        Op::Coproduct => {
            let h = Hopf::new(alg, fl);
            let d = h.coproduct(&nf).map_err(|e| e.to_string())?;
            Ok(h.render_tensor(&d))
        }
    }
}

fn over_field(d: u32, op: Op, expr: &str, fl: &str) -> Result<String, String> {
    let fl = flavor(fl)?;
    if d == 0 {
        run(GenericField, op, expr, fl)
    } else {
        let field = CyclotomicField::new(d).map_err(|e| e.to_string())?;
        run(field, op, expr, fl)
    }
}

/// PBW normal form of `expr`; `d = 0` means generic `q`.
#[wasm_bindgen]
pub fn normalize(expr: &str, flavor: &str, d: u32) -> Result<String, String> {
    over_field(d, Op::Normalize, expr, flavor)
}

#[wasm_bindgen]
pub fn coproduct(expr: &str, flavor: &str, d: u32) -> Result<String, String> {
    over_field(d, Op::Coproduct, expr, flavor)
}

/// Runs the comma-separated R-matrix checks for the quotient at order `d`
/// and returns the reports as JSON.
#[wasm_bindgen]
pub fn verify_rmatrix(d: u32, checks: &str) -> Result<String, String> {
    let sys = RSystem::new(d).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for name in checks.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let suite: RSuite = name.parse().map_err(|_| format!("unknown check `{name}`"))?;
        out.extend(sys.run(suite).map_err(|e| e.to_string())?);
    }
    serde_json::to_string(&out).map_err(|e| e.to_string())
}
