//! The quasi-R-matrix of the quotient, its regular inverse, and the exact
//! identity checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use web_time::Instant;

use super::{QElem, QKey, QTensor, QuotientAlgebra, Scope};
use crate::algebra::Gen;
use crate::coeff::{q_minus_q_inv, quantum_factorial, CoeffError, Cyclotomic, ScalarField};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::linalg;
use crate::tensor;

/// One summand `c E^k K^i (x) F^k K^j` of the R-matrix.
#[derive(Clone, Debug)]
pub struct RTerm {
    pub k: u32,
    pub i: u32,
    pub j: u32,
    pub coefficient: Cyclotomic,
    pub left: QKey,
    pub right: QKey,
}

fn r_coefficient(q: &QuotientAlgebra, k: u32, i: u32, j: u32) -> std::result::Result<Cyclotomic, CoeffError> {
    let field = q.field();
    let d = q.d() as i64;
    let (k, i, j) = (k as i64, i as i64, j as i64);
    let mut c = field.div(&field.one(), &field.from_int(d))?;
    c = field.mul(&c, &q_minus_q_inv(field).pow(k)?);
    c = field.div(&c, &quantum_factorial(k as u32, field)?)?;
    Ok(field.mul(&c, &field.q_pow(k * (k - 1) / 2 + 2 * k * (i - j) - 2 * i * j)))
}

/// The summands of `R`, for `0 <= k < d` and `1 <= i, j <= d`, sorted by
/// `(k, i, j)`.
pub fn r_terms(q: &QuotientAlgebra) -> Result<Vec<RTerm>> {
    let d = q.d();
    let mut out = Vec::new();
    for k in 0..d {
        for i in 1..=d {
            for j in 1..=d {
                out.push(RTerm {
                    k,
                    i,
                    j,
                    coefficient: r_coefficient(q, k, i, j)?,
                    left: QKey::new(k, 0, i),
                    right: QKey::new(0, k, j),
                });
            }
        }
    }
    Ok(out)
}

fn sum_terms(q: &QuotientAlgebra, terms: impl IntoIterator<Item = RTerm>) -> QTensor<2> {
    let mut r = Lin::zero();
    for t in terms {
        r.add_term([t.left, t.right], t.coefficient, q.field());
    }
    r
}

pub fn build_r(q: &QuotientAlgebra) -> Result<QTensor<2>> {
    Ok(sum_terms(q, r_terms(q)?))
}

/// The R-matrix of the small quantum group, indices `0 <= i, j < d`, carried
/// into `W` by `K^i -> K^i J` (so `K^0 -> J`).
pub fn build_r_tilde(q: &QuotientAlgebra) -> Result<QTensor<2>> {
    let d = q.d();
    let rho = |t: u32| if t == 0 { d } else { t };
    let mut terms = Vec::new();
    for k in 0..d {
        for i in 0..d {
            for j in 0..d {
                terms.push(RTerm {
                    k,
                    i,
                    j,
                    coefficient: r_coefficient(q, k, i, j)?,
                    left: QKey::new(k, 0, rho(i)),
                    right: QKey::new(0, k, rho(j)),
                });
            }
        }
    }
    Ok(sum_terms(q, terms))
}

/// Solves `R X = J (x) J` inside `W (x) W`.
///
/// Left multiplication by the `k`-th layer of `R` raises the `E`-degree of
/// the first leg by exactly `k` and keeps its `F`-degree, so the system is
/// block triangular. Each diagonal block is the action of the `k = 0` layer
/// on the `K`-exponents `(s, t)` of `E^a F^b K^s (x) E^c F^e K^t`, a
/// `d^2 x d^2` system.
pub fn compute_rhat(q: &QuotientAlgebra, r: &QTensor<2>) -> Result<QTensor<2>> {
    let field = q.field();
    let d = q.d();
    let jj: QTensor<2> = Lin::basis([q.j_key(), q.j_key()], field);
    let r0: QTensor<2> = r
        .iter()
        .filter(|(k, _)| k[0].e == 0)
        .map(|(k, c)| (*k, c.clone()))
        .fold(Lin::zero(), |mut acc, (k, c)| {
            acc.add_term(k, c, field);
            acc
        });
    let ts: Vec<(u32, u32)> = (1..=d).flat_map(|s| (1..=d).map(move |t| (s, t))).collect();
    let row_of: BTreeMap<(u32, u32), usize> = ts.iter().enumerate().map(|(n, st)| (*st, n)).collect();

    let mut residual = jj.clone();
    let mut x: QTensor<2> = Lin::zero();
    for level in 0..d {
        // group the residual at this level by PBW part
        let mut blocks: BTreeMap<[u32; 4], Vec<Cyclotomic>> = BTreeMap::new();
        for (k, c) in &residual {
            if k[0].e != level {
                continue;
            }
            if k[0].t == 0 || k[1].t == 0 {
                return Err(Error::Singular);
            }
            let pbw = [k[0].e, k[0].f, k[1].e, k[1].f];
            let rhs = blocks.entry(pbw).or_insert_with(|| vec![field.zero(); ts.len()]);
            rhs[row_of[&(k[0].t, k[1].t)]] = c.clone();
        }
        let mut x_level: QTensor<2> = Lin::zero();
        for (pbw, rhs) in blocks {
            let key = |(s, t): (u32, u32)| [QKey::new(pbw[0], pbw[1], s), QKey::new(pbw[2], pbw[3], t)];
            let mut m = vec![vec![field.zero(); ts.len()]; ts.len()];
            for (col, st) in ts.iter().enumerate() {
                let img = tensor::mul(q, &r0, &Lin::basis(key(*st), field));
                for (k, c) in &img {
                    m[row_of[&(k[0].t, k[1].t)]][col] = c.clone();
                }
            }
            let (sol, nullity) = linalg::solve(&m, &rhs, field).ok_or(Error::Singular)?;
            if nullity > 0 {
                return Err(Error::Singular);
            }
            for (st, c) in ts.iter().zip(sol) {
                x_level.add_term(key(*st), c, field);
            }
        }
        residual = residual.sub(&tensor::mul(q, r, &x_level), field);
        x = x.add(&x_level, field);
    }
    if !residual.is_zero() {
        return Err(Error::Singular);
    }
    Ok(x)
}

/// `(T (x) id)(x)`.
pub fn antipode_left(q: &QuotientAlgebra, x: &QTensor<2>) -> QTensor<2> {
    let field = q.field();
    let mut out = Lin::zero();
    for (k, c) in x {
        let legs = [&q.antipode_key(&k[0]), &q.basis_elem(k[1])];
        out.add_scaled(&tensor::outer(q, legs), c, field);
    }
    out
}

/// Result of one identity check, in the shared report schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RCheck {
    pub d: u32,
    pub check: String,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub equal: bool,
    pub elapsed_ms: u64,
    /// `equal` for identities, `!equal` for the non-invertibility witness.
    pub pass: bool,
}

impl RCheck {
    pub fn to_text(&self) -> String {
        format!(
            "d={} {}: equal: {} ({} vs {} terms, {} ms) {}",
            self.d,
            self.check,
            self.equal,
            self.lhs_terms,
            self.rhs_terms,
            self.elapsed_ms,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Check families selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RSuite {
    Rho,
    Regular,
    Intertwine,
    IntertwineFull,
    Quasitriangular,
    Qybe,
}

impl RSuite {
    pub const ALL: [RSuite; 6] = [
        RSuite::Rho,
        RSuite::Regular,
        RSuite::Intertwine,
        RSuite::IntertwineFull,
        RSuite::Quasitriangular,
        RSuite::Qybe,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RSuite::Rho => "rho",
            RSuite::Regular => "regular",
            RSuite::Intertwine => "intertwine",
            RSuite::IntertwineFull => "intertwine-full",
            RSuite::Quasitriangular => "quasitriangular",
            RSuite::Qybe => "qybe",
        }
    }
}

impl fmt::Display for RSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RSuite::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnsupportedWord(s.to_string()))
    }
}

/// A quotient together with its R-matrix; `R^` is computed on first use.
pub struct RSystem {
    q: QuotientAlgebra,
    r: QTensor<2>,
    rhat: OnceLock<Result<QTensor<2>>>,
}

impl RSystem {
    pub fn new(d: u32) -> Result<Self> {
        let q = QuotientAlgebra::new(d)?;
        let r = build_r(&q)?;
        Ok(RSystem {
            q,
            r,
            rhat: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.q
    }

    pub fn d(&self) -> u32 {
        self.q.d()
    }

    pub fn r(&self) -> &QTensor<2> {
        &self.r
    }

    pub fn rhat(&self) -> Result<&QTensor<2>> {
        self.rhat
            .get_or_init(|| compute_rhat(&self.q, &self.r))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn jj(&self) -> QTensor<2> {
        Lin::basis([self.q.j_key(), self.q.j_key()], self.q.field())
    }

    fn mul2(&self, x: &QTensor<2>, y: &QTensor<2>) -> QTensor<2> {
        tensor::mul(&self.q, x, y)
    }

    fn mul3(&self, x: &QTensor<3>, y: &QTensor<3>) -> QTensor<3> {
        tensor::mul(&self.q, x, y)
    }

    /// `R_{ab}`, with the unit `J` in the remaining leg.
    pub fn leg(&self, at: [usize; 2]) -> QTensor<3> {
        tensor::embed3(&self.q, &self.r, at, self.q.j_key())
    }

    fn compare<const N: usize>(
        &self,
        check: impl Into<String>,
        start: Instant,
        lhs: &QTensor<N>,
        rhs: &QTensor<N>,
        expect_equal: bool,
    ) -> RCheck {
        let equal = lhs == rhs;
        RCheck {
            d: self.d(),
            check: check.into(),
            lhs_terms: lhs.len(),
            rhs_terms: rhs.len(),
            equal,
            elapsed_ms: start.elapsed().as_millis() as u64,
            pass: equal == expect_equal,
        }
    }

    pub fn run(&self, suite: RSuite) -> Result<Vec<RCheck>> {
        Ok(match suite {
            RSuite::Rho => vec![self.check_rho()?],
            RSuite::Regular => self.check_regular()?,
            RSuite::Intertwine => self.check_intertwine(),
            RSuite::IntertwineFull => self.check_intertwine_full(),
            RSuite::Quasitriangular => self.check_quasitriangular(),
            RSuite::Qybe => vec![self.check_qybe()],
        })
    }

    pub fn check_rho(&self) -> Result<RCheck> {
        let t = Instant::now();
        let tilde = build_r_tilde(&self.q)?;
        Ok(self.compare("rho: R~ = R", t, &tilde, &self.r, true))
    }

    pub fn check_regular(&self) -> Result<Vec<RCheck>> {
        let t = Instant::now();
        let rhat = self.rhat()?.clone();
        let r = &self.r;
        let jj = self.jj();
        let one = self.q.one_key();
        let one_one: QTensor<2> = Lin::basis([one, one], self.q.field());
        let r_rhat = self.mul2(r, &rhat);
        let rhat_r = self.mul2(&rhat, r);
        let mut out = vec![
            self.compare("rrr1: R R^ R = R", t, &self.mul2(&r_rhat, r), r, true),
            self.compare("rrr2: R^ R R^ = R^", t, &self.mul2(&rhat_r, &rhat), &rhat, true),
            self.compare("R R^ = J⊗J", t, &r_rhat, &jj, true),
            self.compare("R^ R = J⊗J", t, &rhat_r, &jj, true),
            self.compare("R R^ != 1⊗1", t, &r_rhat, &one_one, false),
        ];
        let t = Instant::now();
        out.push(self.compare("R^ = (T⊗id)(R)", t, &rhat, &antipode_left(&self.q, r), true));
        Ok(out)
    }

    fn intertwine_one(&self, label: &str, x: &QElem, scope: Scope) -> RCheck {
        let t = Instant::now();
        let dx = self.q.coproduct(x, scope);
        let lhs = self.mul2(&tensor::flip(&self.q, &dx), &self.r);
        let rhs = self.mul2(&self.r, &dx);
        self.compare(format!("dr: x = {label}"), t, &lhs, &rhs, true)
    }

    /// `Delta^op(x) R = R Delta(x)` on the generators of `W`.
    pub fn check_intertwine(&self) -> Vec<RCheck> {
        [("EJ", Gen::E), ("FJ", Gen::F), ("K", Gen::K)]
            .iter()
            .map(|(label, g)| self.intertwine_one(label, &self.q.rho(*g), Scope::W))
            .collect()
    }

    /// The same identity with the coproduct of the whole algebra, on its
    /// generators and `1`.
    pub fn check_intertwine_full(&self) -> Vec<RCheck> {
        let gens = [("E", Gen::E), ("F", Gen::F), ("K", Gen::K), ("Kb", Gen::Kb)];
        let mut out: Vec<RCheck> = gens
            .iter()
            .map(|(label, g)| self.intertwine_one(&format!("{label} (full)"), &self.q.gen(*g), Scope::Full))
            .collect();
        let one = self.q.basis_elem(self.q.one_key());
        out.push(self.intertwine_one("1 (full)", &one, Scope::Full));
        out
    }

    /// `(Delta (x) id) R = R13 R23` and `(id (x) Delta) R = R13 R12`.
    pub fn check_quasitriangular(&self) -> Vec<RCheck> {
        let field = self.q.field();
        let t = Instant::now();
        let mut lhs1: QTensor<3> = Lin::zero();
        let mut lhs2: QTensor<3> = Lin::zero();
        for (k, c) in &self.r {
            for (u, a) in &self.q.coproduct_key(&k[0], Scope::W) {
                lhs1.add_term([u[0], u[1], k[1]], field.mul(c, a), field);
            }
            for (u, a) in &self.q.coproduct_key(&k[1], Scope::W) {
                lhs2.add_term([k[0], u[0], u[1]], field.mul(c, a), field);
            }
        }
        let (r12, r13, r23) = (self.leg([0, 1]), self.leg([0, 2]), self.leg([1, 2]));
        let rhs1 = self.mul3(&r13, &r23);
        let first = self.compare("dir1: (Δ⊗id)R = R13 R23", t, &lhs1, &rhs1, true);
        let t = Instant::now();
        let rhs2 = self.mul3(&r13, &r12);
        vec![first, self.compare("dir2: (id⊗Δ)R = R13 R12", t, &lhs2, &rhs2, true)]
    }

    /// `R12 R13 R23 = R23 R13 R12`.
    pub fn check_qybe(&self) -> RCheck {
        let t = Instant::now();
        let (r12, r13, r23) = (self.leg([0, 1]), self.leg([0, 2]), self.leg([1, 2]));
        let lhs = self.mul3(&self.mul3(&r12, &r13), &r23);
        let rhs = self.mul3(&self.mul3(&r23, &r13), &r12);
        self.compare("qybe: R12 R13 R23 = R23 R13 R12", t, &lhs, &rhs, true)
    }

    /// Serializes `R`, and `R^` if it has been computed, as `json` or `text`.
    pub fn export(&self, format: &str) -> Result<String> {
        let records: Vec<RRecord> = r_terms(&self.q)?
            .into_iter()
            .map(|t| RRecord {
                k: t.k,
                i: t.i,
                j: t.j,
                coefficient: t.coefficient.to_string(),
                basis: [self.q.render_key(&t.left), self.q.render_key(&t.right)],
            })
            .collect();
        let rhat: Option<Vec<TensorRecord>> = self.rhat.get().and_then(|r| r.as_ref().ok()).map(|x| {
            x.iter()
                .map(|(k, c)| TensorRecord {
                    coefficient: c.to_string(),
                    basis: [self.q.render_key(&k[0]), self.q.render_key(&k[1])],
                })
                .collect()
        });
        match format {
            "json" => {
                let doc = RExport {
                    d: self.d(),
                    r: records,
                    rhat,
                };
                Ok(serde_json::to_string_pretty(&doc).expect("export is serializable"))
            }
            "text" => {
                let mut out = format!("R, d = {}, {} terms\n", self.d(), records.len());
                for r in &records {
                    out.push_str(&format!(
                        "k={} i={} j={}  ({})  {} ⊗ {}\n",
                        r.k, r.i, r.j, r.coefficient, r.basis[0], r.basis[1]
                    ));
                }
                if let Some(rhat) = rhat {
                    out.push_str(&format!("R^, {} terms\n", rhat.len()));
                    for r in &rhat {
                        out.push_str(&format!("({})  {} ⊗ {}\n", r.coefficient, r.basis[0], r.basis[1]));
                    }
                }
                Ok(out)
            }
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RRecord {
    pub k: u32,
    pub i: u32,
    pub j: u32,
    pub coefficient: String,
    pub basis: [String; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorRecord {
    pub coefficient: String,
    pub basis: [String; 2],
}

#[derive(Clone, Debug, Serialize)]
struct RExport {
    d: u32,
    r: Vec<RRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhat: Option<Vec<TensorRecord>>,
}
