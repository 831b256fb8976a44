//! The catalog of block algebras: `A_m`, `D_3`, `D_4`, `R_4`, `H_4`, `G`,
//! `F_m`, `B`, `B_1`, `D`, and the wild quivers `W_1`..`W_6` plus the
//! nine-vertex shape used by the eighth wildness construction.
//!
//! Relation lists are transcribed character for character from the printed
//! presentations; a written word like `beta alpha` is the path "beta, then
//! alpha". The `self_test` routine rebuilds every entry, checks vertex and
//! arrow counts, and verifies that the standard complexes over `A_2` and
//! `F_3` satisfy `d^2 = 0` with differentials in the radical, which pins the
//! path-composition convention.

use crate::algebra::{Algebra, AlgebraError};
use crate::complex::ProjComplex;
use crate::module::ModuleRep;
use crate::proj::ProjMorphism;
use crate::quiver::{AlgebraElement, Path, Quiver};
use crate::scalar::{Field, Scalar};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CatalogName {
    A(usize),
    D3,
    D4,
    R4,
    H4,
    G,
    F(usize),
    B,
    B1,
    D,
    W(u8),
    /// The nine-vertex quiver underlying the wild box; only its arrow
    /// matrices are used (the box differential is documentation).
    WBox,
}

impl CatalogName {
    pub fn parse(s: &str) -> Result<Self, CatalogError> {
        let t = s.trim();
        let norm = t.replace(['_', '(', ')'], "");
        let up = norm.to_uppercase();
        let name = match up.as_str() {
            "D3" => CatalogName::D3,
            "D4" => CatalogName::D4,
            "R4" => CatalogName::R4,
            "H4" => CatalogName::H4,
            "G" => CatalogName::G,
            "B" => CatalogName::B,
            "B1" => CatalogName::B1,
            "D" => CatalogName::D,
            "WBOX" => CatalogName::WBox,
            _ => {
                if let Some(rest) = up.strip_prefix('W') {
                    let k: u8 = rest.parse().map_err(|_| CatalogError::UnknownName(s.into()))?;
                    if !(1..=6).contains(&k) {
                        return Err(CatalogError::UnknownName(s.into()));
                    }
                    CatalogName::W(k)
                } else if let Some(rest) = up.strip_prefix('A') {
                    let m: usize = rest.parse().map_err(|_| CatalogError::UnknownName(s.into()))?;
                    CatalogName::A(m)
                } else if let Some(rest) = up.strip_prefix('F') {
                    let m: usize = rest.parse().map_err(|_| CatalogError::UnknownName(s.into()))?;
                    CatalogName::F(m)
                } else {
                    return Err(CatalogError::UnknownName(s.into()));
                }
            }
        };
        Ok(name)
    }
}

impl std::fmt::Display for CatalogName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogName::A(m) => write!(f, "A{m}"),
            CatalogName::D3 => write!(f, "D3"),
            CatalogName::D4 => write!(f, "D4"),
            CatalogName::R4 => write!(f, "R4"),
            CatalogName::H4 => write!(f, "H4"),
            CatalogName::G => write!(f, "G"),
            CatalogName::F(m) => write!(f, "F{m}"),
            CatalogName::B => write!(f, "B"),
            CatalogName::B1 => write!(f, "B1"),
            CatalogName::D => write!(f, "D"),
            CatalogName::W(k) => write!(f, "W{k}"),
            CatalogName::WBox => write!(f, "WBox"),
        }
    }
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub algebra: Arc<Algebra>,
    pub provenance: &'static str,
}

fn cache() -> &'static Mutex<HashMap<(CatalogName, Field), Arc<Algebra>>> {
    static CACHE: OnceLock<Mutex<HashMap<(CatalogName, Field), Arc<Algebra>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn get(name: CatalogName) -> Result<CatalogEntry, CatalogError> {
    get_over(name, Field::Rationals)
}

pub fn get_over(name: CatalogName, field: Field) -> Result<CatalogEntry, CatalogError> {
    validate_params(name)?;
    {
        let c = cache().lock().unwrap();
        if let Some(a) = c.get(&(name, field)) {
            return Ok(CatalogEntry { name, algebra: Arc::clone(a), provenance: provenance(name) });
        }
    }
    let algebra = build(name, field)?;
    cache().lock().unwrap().insert((name, field), Arc::clone(&algebra));
    Ok(CatalogEntry { name, algebra, provenance: provenance(name) })
}

fn validate_params(name: CatalogName) -> Result<(), CatalogError> {
    match name {
        CatalogName::A(m) if m < 1 => Err(CatalogError::InvalidParams("A_m requires m >= 1".into())),
        CatalogName::F(m) if m < 3 || m % 2 == 0 => {
            Err(CatalogError::InvalidParams("F_m requires odd m >= 3 (m = 2n+1, n > 0)".into()))
        }
        _ => Ok(()),
    }
}

pub fn list() -> Vec<String> {
    let mut names = vec![
        "A1".into(),
        "A2".into(),
        "A3".into(),
        "Am (m >= 1)".into(),
        "D3".into(),
        "D4".into(),
        "R4".into(),
        "H4".into(),
        "G".into(),
        "F3".into(),
        "F5".into(),
        "Fm (odd m >= 3)".into(),
        "B".into(),
        "B1".into(),
        "D".into(),
    ];
    names.extend((1..=6).map(|k| format!("W{k}")));
    names.push("WBox".into());
    names
}

fn provenance(name: CatalogName) -> &'static str {
    match name {
        CatalogName::A(_) => "blocks of Schur algebras of finite representation type",
        CatalogName::D3 => "non-semisimple blocks of S(2,4), S(2,9) at p=2",
        CatalogName::D4 => "non-semisimple blocks of S(2,9), S(2,10), S(2,11) at p=3",
        CatalogName::R4 => "the block of S(3,7) at p=3",
        CatalogName::H4 => "the block of S(3,8) at p=3",
        CatalogName::G => "blocks of S(3,4)_1, S(3,5)_1 at p=3 and S(3,2)_1, S(3,3)_1 at p=2",
        CatalogName::F(_) => "blocks of S(2,d)_2 (d odd, p=2) and S(2,d)_1 (any p)",
        CatalogName::B => "blocks of S(4,3)_1, S(4,4)_1, S(4,5)_1 at p=3 and S(4,2)_1, S(4,3)_1 at p=2",
        CatalogName::B1 => "blocks of S(3,d)_1 for p >= 5, p <= d <= 2p-1, and S(3,3)_1 at p=3",
        CatalogName::D => "blocks of S(2,4)_2 and S(2,9)_3 at p=2",
        CatalogName::W(_) => "wild quiver used by the wildness-witness constructions",
        CatalogName::WBox => {
            "shape of the wild box W; its box differential d(c)=d*phi, d(f)=phi*e and the \
             quality-form value f_W(d) = -1 on the printed dimension vector are documentation only"
        }
    }
}

struct Builder {
    quiver: Quiver,
    field: Field,
    relations: Vec<AlgebraElement>,
}

impl Builder {
    fn new(field: Field, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Self {
        let quiver = Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows.iter().map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())).collect(),
        )
        .expect("catalog quiver");
        Builder { quiver, field, relations: Vec::new() }
    }

    fn path(&self, names: &[&str]) -> AlgebraElement {
        AlgebraElement::from_path(self.field, Path::from_arrow_names(&self.quiver, names).expect("catalog path"))
    }

    /// A monomial relation: the path is zero.
    fn zero_rel(&mut self, names: &[&str]) {
        let p = self.path(names);
        self.relations.push(p);
    }

    /// A binomial relation: the two paths are equal.
    fn equal_rel(&mut self, lhs: &[&str], rhs: &[&str]) {
        let r = self.path(lhs).sub(&self.path(rhs));
        self.relations.push(r);
    }

    fn custom(&mut self, e: AlgebraElement) {
        self.relations.push(e);
    }

    fn build(self) -> Result<Arc<Algebra>, AlgebraError> {
        Algebra::build(self.quiver, self.field, self.relations)
    }
}

fn linear_quiver(m: usize) -> (Vec<String>, Vec<(String, String, String)>) {
    let vertices: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for i in 1..m {
        arrows.push((format!("alpha{i}"), i.to_string(), (i + 1).to_string()));
        arrows.push((format!("beta{i}"), (i + 1).to_string(), i.to_string()));
    }
    (vertices, arrows)
}

fn build_a_like(m: usize, field: Field, with_top_relation: bool) -> Result<Arc<Algebra>, AlgebraError> {
    let (vertices, arrows) = linear_quiver(m);
    let quiver = Quiver::new(vertices, arrows).expect("A_m quiver");
    let mut b = Builder { quiver, field, relations: Vec::new() };
    let a = |i: usize| format!("alpha{i}");
    let be = |i: usize| format!("beta{i}");
    for i in 1..=m.saturating_sub(2) {
        b.zero_rel(&[&a(i), &a(i + 1)]);
        b.zero_rel(&[&be(i + 1), &be(i)]);
        b.equal_rel(&[&be(i), &a(i)], &[&a(i + 1), &be(i + 1)]);
    }
    if m >= 2 {
        b.zero_rel(&["alpha1", "beta1"]);
        if with_top_relation {
            b.zero_rel(&[&be(m - 1), &a(m - 1)]);
        }
    }
    b.build()
}

/// The star quiver with center `0` and satellites `1..=k`:
/// `alpha_i: i -> 0`, `beta_i: 0 -> i`.
fn star_builder(field: Field, k: usize) -> Builder {
    let mut vertices: Vec<String> = vec!["0".into()];
    vertices.extend((1..=k).map(|i| i.to_string()));
    let mut arrows = Vec::new();
    for i in 1..=k {
        arrows.push((format!("alpha{i}"), i.to_string(), "0".to_string()));
        arrows.push((format!("beta{i}"), "0".to_string(), i.to_string()));
    }
    let quiver = Quiver::new(vertices, arrows).expect("star quiver");
    Builder { quiver, field, relations: Vec::new() }
}

fn build(name: CatalogName, field: Field) -> Result<Arc<Algebra>, CatalogError> {
    let alg = match name {
        CatalogName::A(m) => build_a_like(m, field, false)?,
        CatalogName::F(m) => build_a_like(m, field, true)?,
        CatalogName::D3 => {
            let mut b = Builder::new(
                field,
                &["1", "2", "3"],
                &[
                    ("alpha1", "1", "2"),
                    ("beta1", "2", "1"),
                    ("beta2", "2", "3"),
                    ("alpha2", "3", "2"),
                ],
            );
            b.zero_rel(&["alpha1", "beta1"]);
            b.zero_rel(&["alpha2", "beta2"]);
            b.zero_rel(&["alpha1", "beta2", "alpha2"]);
            b.zero_rel(&["beta2", "alpha2", "beta1"]);
            b.build()?
        }
        CatalogName::D4 => {
            let mut b = star_builder(field, 3);
            b.zero_rel(&["alpha1", "beta1"]);
            b.zero_rel(&["alpha2", "beta2"]);
            b.zero_rel(&["alpha3", "beta1"]);
            b.zero_rel(&["alpha3", "beta2"]);
            b.zero_rel(&["alpha1", "beta3"]);
            b.zero_rel(&["alpha2", "beta3"]);
            b.equal_rel(&["beta2", "alpha2"], &["beta3", "alpha3"]);
            b.zero_rel(&["alpha1", "beta2", "alpha2"]);
            b.zero_rel(&["beta2", "alpha2", "beta1"]);
            b.build()?
        }
        CatalogName::R4 => {
            let (vertices, arrows) = linear_quiver(4);
            let quiver = Quiver::new(vertices, arrows).expect("R4 quiver");
            let mut b = Builder { quiver, field, relations: Vec::new() };
            b.zero_rel(&["alpha1", "beta1"]);
            b.zero_rel(&["alpha1", "alpha2"]);
            b.zero_rel(&["beta2", "beta1"]);
            b.equal_rel(&["beta1", "alpha1"], &["alpha2", "beta2"]);
            b.equal_rel(&["beta2", "alpha2"], &["alpha3", "beta3"]);
            b.build()?
        }
        CatalogName::H4 => {
            let mut b = star_builder(field, 3);
            b.zero_rel(&["alpha1", "beta1"]);
            b.zero_rel(&["alpha1", "beta2"]);
            b.zero_rel(&["alpha1", "beta3"]);
            b.zero_rel(&["alpha3", "beta1"]);
            b.zero_rel(&["alpha3", "beta3"]);
            b.zero_rel(&["alpha2", "beta1"]);
            // beta2 alpha2 = beta1 alpha1 + beta3 alpha3
            let e = b
                .path(&["beta2", "alpha2"])
                .sub(&b.path(&["beta1", "alpha1"]))
                .sub(&b.path(&["beta3", "alpha3"]));
            b.custom(e);
            b.build()?
        }
        CatalogName::G => {
            let mut b = star_builder(field, 3);
            b.equal_rel(&["beta1", "alpha1"], &["beta2", "alpha2"]);
            b.equal_rel(&["beta2", "alpha2"], &["beta3", "alpha3"]);
            for i in 1..=3 {
                for j in 1..=3 {
                    b.zero_rel(&[&format!("alpha{i}"), &format!("beta{j}")]);
                }
            }
            b.build()?
        }
        CatalogName::B => {
            let mut b = star_builder(field, 4);
            b.equal_rel(&["beta1", "alpha1"], &["beta2", "alpha2"]);
            b.equal_rel(&["beta2", "alpha2"], &["beta3", "alpha3"]);
            b.equal_rel(&["beta3", "alpha3"], &["beta4", "alpha4"]);
            for i in 1..=4 {
                for j in 1..=4 {
                    b.zero_rel(&[&format!("alpha{i}"), &format!("beta{j}")]);
                }
            }
            b.build()?
        }
        CatalogName::B1 => {
            let mut b = star_builder(field, 4);
            b.equal_rel(&["beta1", "alpha1"], &["beta2", "alpha2"]);
            b.equal_rel(&["beta2", "alpha2"], &["beta3", "alpha3"]);
            b.equal_rel(&["beta3", "alpha3"], &["beta4", "alpha4"]);
            for i in 1..=3 {
                b.zero_rel(&[&format!("alpha{i}"), "beta4"]);
                b.zero_rel(&[&format!("beta{i}"), &format!("alpha{i}")]);
            }
            b.build()?
        }
        CatalogName::D => {
            let mut b = star_builder(field, 3);
            b.equal_rel(&["beta1", "alpha1"], &["beta2", "alpha2"]);
            b.zero_rel(&["alpha1", "beta1"]);
            b.zero_rel(&["alpha1", "beta2"]);
            b.zero_rel(&["alpha2", "beta1"]);
            b.zero_rel(&["alpha2", "beta2"]);
            b.zero_rel(&["alpha3", "beta3"]);
            b.zero_rel(&["alpha1", "beta3", "alpha3"]);
            b.zero_rel(&["alpha2", "beta3", "alpha3"]);
            b.zero_rel(&["beta3", "alpha3", "beta2"]);
            b.zero_rel(&["beta3", "alpha3", "beta1"]);
            b.build()?
        }
        CatalogName::W(1) => Builder::new(
            field,
            &["0", "1", "2", "3", "4", "5"],
            &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0"), ("d", "0", "4"), ("e", "0", "5")],
        )
        .build()?,
        CatalogName::W(2) => Builder::new(
            field,
            &["0", "1", "2", "3", "4", "5"],
            &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0"), ("d", "4", "0"), ("e", "0", "5")],
        )
        .build()?,
        CatalogName::W(3) => {
            let mut b = Builder::new(
                field,
                &["0", "1", "2", "3", "4", "5"],
                &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0"), ("d", "4", "0"), ("e", "0", "5")],
            );
            b.zero_rel(&["d", "e"]);
            b.build()?
        }
        CatalogName::W(4) => Builder::new(
            field,
            &["0", "1", "2", "3", "4", "5"],
            &[("a", "1", "0"), ("b", "2", "0"), ("c", "0", "3"), ("d", "0", "4"), ("e", "0", "5")],
        )
        .build()?,
        CatalogName::W(5) => {
            let mut b = Builder::new(
                field,
                &["0", "1", "2", "3", "4", "5"],
                &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0"), ("d", "0", "4"), ("e", "0", "5")],
            );
            b.zero_rel(&["c", "d"]);
            b.build()?
        }
        CatalogName::W(6) => Builder::new(
            field,
            &["1", "2", "3", "4", "5", "6", "7", "8", "9"],
            &[
                ("a", "1", "2"),
                ("b", "2", "3"),
                ("c", "3", "4"),
                ("d", "4", "5"),
                ("e", "5", "6"),
                ("f", "6", "7"),
                ("g", "7", "8"),
                ("h", "9", "4"),
            ],
        )
        .build()?,
        CatalogName::W(_) => unreachable!("validated"),
        CatalogName::WBox => Builder::new(
            field,
            &["1", "2", "3", "4", "5", "6", "7", "8", "9"],
            &[
                ("a", "1", "2"),
                ("b", "2", "3"),
                ("c", "3", "4"),
                ("d", "3", "5"),
                ("e", "4", "6"),
                ("f", "5", "6"),
                ("g", "6", "7"),
                ("h", "7", "8"),
                ("t", "8", "9"),
            ],
        )
        .build()?,
    };
    Ok(alg)
}

/// Expected (vertices, arrows) counts per printed quiver.
pub fn expected_counts(name: CatalogName) -> Option<(usize, usize)> {
    Some(match name {
        CatalogName::A(m) | CatalogName::F(m) => (m, 2 * (m - 1)),
        CatalogName::D3 => (3, 4),
        CatalogName::D4 | CatalogName::G | CatalogName::D | CatalogName::H4 => (4, 6),
        CatalogName::R4 => (4, 6),
        CatalogName::B | CatalogName::B1 => (5, 8),
        CatalogName::W(6) => (9, 8),
        CatalogName::W(_) => (6, 5),
        CatalogName::WBox => (9, 9),
    })
}

/// The eight standard `A_2` complex families and the `F_3` resolution window
/// are rebuilt and checked; any failure is reported by name.
pub struct SelfTestReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

pub fn self_test() -> SelfTestReport {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |name: &str, ok: bool| {
        checked += 1;
        if !ok {
            failures.push(name.to_string());
        }
    };

    let names: Vec<CatalogName> = {
        let mut v: Vec<CatalogName> = (1..=6).map(CatalogName::A).collect();
        v.extend([CatalogName::F(3), CatalogName::F(5), CatalogName::F(7)]);
        v.extend([
            CatalogName::D3,
            CatalogName::D4,
            CatalogName::R4,
            CatalogName::H4,
            CatalogName::G,
            CatalogName::B,
            CatalogName::B1,
            CatalogName::D,
        ]);
        v.extend((1..=6).map(CatalogName::W));
        v.push(CatalogName::WBox);
        v
    };

    for name in names {
        match get(name) {
            Ok(entry) => {
                let alg = &entry.algebra;
                if let Some((nv, na)) = expected_counts(name) {
                    check(&format!("{name}: vertex/arrow counts"), alg.quiver.n_vertices() == nv && alg.quiver.n_arrows() == na);
                }
                check(
                    &format!("{name}: relations vanish"),
                    alg.relations.iter().all(|r| alg.normalize(r).is_zero()),
                );
                check(
                    &format!("{name}: projectives satisfy relations"),
                    (0..alg.n_vertices()).all(|v| ModuleRep::projective(alg, v).validate().is_ok()),
                );
                let total: usize = (0..alg.n_vertices()).map(|v| alg.projective_dim(v)).sum();
                check(&format!("{name}: sum of projective dims = dim"), total == alg.dimension());
            }
            Err(e) => {
                check(&format!("{name}: build failed: {e}"), false);
            }
        }
    }

    // F3 specifics used by the complex constructor
    if let Ok(f3) = get(CatalogName::F(3)) {
        let alg = &f3.algebra;
        let loop1 = alg.path_from_names(&["beta1", "alpha1"]).unwrap();
        let loop2 = alg.mul(&loop1, &loop1);
        check("F3: (beta1 alpha1)^2 = 0", loop2.is_zero());
        check("F3: beta1 alpha1 != 0", !loop1.is_zero());
        check("F3: dimension 8", alg.dimension() == 8);
        check("F3: periodic resolution window", f3_resolution_window(alg, 3).in_frak_p());
    }

    // A2 displayed complexes (the convention self-test)
    if let Ok(a2) = get(CatalogName::A(2)) {
        for s in 1..=3 {
            for c in crate::a2::all_shapes(s) {
                let cx = crate::a2::realize(&a2.algebra, &c);
                check(&format!("A2 complex {c:?}"), cx.in_frak_p());
            }
        }
    }

    SelfTestReport { checked, failures }
}

/// A window of the 2-periodic resolution over `F_3`:
/// `P1 (+) P3 -> P2 -> P1 (+) P3 -> ...` with maps `phi = (p(alpha1), -p(beta2))`
/// and `psi = (p(beta1), p(alpha2))`. The sign on the `p(beta2)` component is
/// forced by `d^2 = 0`.
pub fn f3_resolution_window(alg: &Arc<Algebra>, pairs: usize) -> ProjComplex {
    let p13 = vec![1, 0, 1];
    let p2 = vec![0, 1, 0];
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    let phi = |a: &Arc<Algebra>| {
        let mut m = ProjMorphism::zero(a, p13.clone(), p2.clone());
        m.set_entry(0, 0, a.path_from_names(&["alpha1"]).unwrap());
        m.set_entry(1, 0, a.path_from_names(&["beta2"]).unwrap().scale(&Scalar::one(a.field).neg()));
        m
    };
    let psi = |a: &Arc<Algebra>| {
        let mut m = ProjMorphism::zero(a, p2.clone(), p13.clone());
        m.set_entry(0, 0, a.path_from_names(&["beta1"]).unwrap());
        m.set_entry(0, 1, a.path_from_names(&["alpha2"]).unwrap());
        m
    };
    for k in 0..pairs {
        terms.push(p13.clone());
        diffs.push(phi(alg));
        terms.push(p2.clone());
        if k + 1 < pairs {
            diffs.push(psi(alg));
        }
    }
    ProjComplex::from_terms(alg, 0, terms, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_entry() {
        let e = get(CatalogName::A(2)).unwrap();
        assert_eq!(e.algebra.dimension(), 5);
    }

    #[test]
    fn f3_entry_and_params() {
        let e = get(CatalogName::F(3)).unwrap();
        assert_eq!(e.algebra.dimension(), 8);
        assert!(matches!(get(CatalogName::F(4)), Err(CatalogError::InvalidParams(_))));
        assert!(matches!(get(CatalogName::A(0)), Err(CatalogError::InvalidParams(_))));
    }

    #[test]
    fn f3_relations_as_printed() {
        // alpha1 alpha2 = 0, beta2 beta1 = 0, alpha1 beta1 = 0,
        // beta1 alpha1 = alpha2 beta2, beta2 alpha2 = 0
        let e = get(CatalogName::F(3)).unwrap();
        let alg = &e.algebra;
        assert!(alg.path_from_names(&["alpha1", "alpha2"]).unwrap().is_zero());
        assert!(alg.path_from_names(&["beta2", "beta1"]).unwrap().is_zero());
        assert!(alg.path_from_names(&["alpha1", "beta1"]).unwrap().is_zero());
        assert!(alg.path_from_names(&["beta2", "alpha2"]).unwrap().is_zero());
        let l = alg.path_from_names(&["beta1", "alpha1"]).unwrap();
        let r = alg.path_from_names(&["alpha2", "beta2"]).unwrap();
        assert_eq!(l, r);
        assert!(!l.is_zero());
    }

    #[test]
    fn f3_projective_dimension_vectors() {
        let e = get(CatalogName::F(3)).unwrap();
        assert_eq!(e.algebra.projective_dim_vector(0), vec![1, 1, 0]);
        assert_eq!(e.algebra.projective_dim_vector(1), vec![1, 2, 1]);
        assert_eq!(e.algebra.projective_dim_vector(2), vec![0, 1, 1]);
    }

    #[test]
    fn name_parsing() {
        assert_eq!(CatalogName::parse("A2").unwrap(), CatalogName::A(2));
        assert_eq!(CatalogName::parse("a_2").unwrap(), CatalogName::A(2));
        assert_eq!(CatalogName::parse("F3").unwrap(), CatalogName::F(3));
        assert_eq!(CatalogName::parse("w6").unwrap(), CatalogName::W(6));
        assert!(CatalogName::parse("Z9").is_err());
    }

    #[test]
    fn full_self_test_passes() {
        let report = self_test();
        assert!(report.failures.is_empty(), "failures: {:?}", report.failures);
    }

    #[test]
    fn kernels_of_f3_generators() {
        // Ker p(alpha1) = Ker p(beta2) = 0, Ker p(alpha2) = Ker p(beta1) nonzero
        let e = get(CatalogName::F(3)).unwrap();
        let alg = &e.algebra;
        let mk = |src: Vec<usize>, tgt: Vec<usize>, names: &[&str]| {
            let mut m = ProjMorphism::zero(alg, src, tgt);
            m.set_entry(0, 0, alg.path_from_names(names).unwrap());
            m
        };
        let a1 = mk(vec![1, 0, 0], vec![0, 1, 0], &["alpha1"]);
        let b2 = mk(vec![0, 0, 1], vec![0, 1, 0], &["beta2"]);
        let b1 = mk(vec![0, 1, 0], vec![1, 0, 0], &["beta1"]);
        let a2m = mk(vec![0, 1, 0], vec![0, 0, 1], &["alpha2"]);
        assert_eq!(a1.to_module_map().kernel().0.total_dim(), 0);
        assert_eq!(b2.to_module_map().kernel().0.total_dim(), 0);
        let kb1 = b1.to_module_map().kernel().0;
        let ka2 = a2m.to_module_map().kernel().0;
        assert_eq!(kb1.dims, vec![1, 1, 1]);
        assert!(kb1.is_isomorphic(&ka2, 3).unwrap());
    }
}
