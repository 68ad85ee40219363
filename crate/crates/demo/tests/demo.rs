use weakq_demo::{coproduct, normalize, verify_rmatrix};

#[test]
fn normalize_generic_and_cyclotomic() {
    assert_eq!(normalize("K*E - q^2*E*K", "w", 0).unwrap(), "0");
    assert_eq!(normalize("K*Eh*Kb", "v", 0).unwrap(), "q^2*Eh");
    assert_eq!(normalize("q^3*F", "w", 3).unwrap(), "F");
}

#[test]
fn coproduct_of_generators() {
    assert_eq!(coproduct("E", "w", 0).unwrap(), "[1 ⊗ E] + [E ⊗ K]");
    assert_eq!(coproduct("Fh", "v", 0).unwrap(), "[Kb ⊗ Fh] + [Fh ⊗ J]");
}

#[test]
fn rmatrix_checks_as_json() {
    let out = verify_rmatrix(3, "qybe, rho").unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v.as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert!(checks.iter().all(|c| c["equal"] == true));
}

#[test]
fn errors_are_messages() {
    assert!(normalize("K*(", "w", 0).unwrap_err().contains("syntax"));
    assert!(normalize("E", "x", 0).unwrap_err().contains("flavor"));
    assert!(normalize("E", "w", 4).unwrap_err().contains("odd"));
    assert!(verify_rmatrix(3, "bogus").unwrap_err().contains("bogus"));
}
