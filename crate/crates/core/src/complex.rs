//! Bounded complexes of projectives and of modules: cohomology, shift,
//! the two truncations, minimal resolutions and perfectness.
//!
//! A complex stores its support as a degree window `lo..lo + terms.len()`;
//! `diffs[k]` is the differential from degree `lo + k` to `lo + k + 1`.
//! The translation `T` moves a complex one step left (the degree `i` term
//! becomes the degree `i - 1` term) and negates differentials.

use crate::algebra::Algebra;
use crate::mat::Mat;
use crate::module::{homology_at, ModuleMap, ModuleRep, Subspace};
use crate::proj::{summands, ProjMorphism};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("not a complex: consecutive differentials at degrees {0}, {1} do not compose to zero")]
    NotAComplex(i64, i64),
    #[error("zero complex where a nonzero one is required")]
    ZeroComplex,
    #[error("no degree s with vanishing cohomology below it; brutal truncation undefined")]
    NoSuchS,
    #[error("perfectness undecided within {steps} resolution steps (window {window})")]
    Inconclusive { steps: usize, window: usize },
    #[error(transparent)]
    Module(#[from] crate::module::ModuleError),
}

/// Total cohomology dimension per degree.
pub type CohomologyVector = BTreeMap<i64, usize>;

#[derive(Clone, Debug)]
pub struct ProjComplex {
    pub alg: Arc<Algebra>,
    pub lo: i64,
    /// Multiplicity vector (per vertex) of each term.
    pub terms: Vec<Vec<usize>>,
    /// diffs[k]: term k -> term k+1.
    pub diffs: Vec<ProjMorphism>,
}

impl ProjComplex {
    pub fn zero(alg: &Arc<Algebra>) -> Self {
        ProjComplex { alg: Arc::clone(alg), lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// A complex concentrated in one degree.
    pub fn stalk(alg: &Arc<Algebra>, mult: Vec<usize>, degree: i64) -> Self {
        ProjComplex { alg: Arc::clone(alg), lo: degree, terms: vec![mult], diffs: Vec::new() }
    }

    pub fn from_terms(alg: &Arc<Algebra>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<ProjMorphism>) -> Self {
        let c = ProjComplex { alg: Arc::clone(alg), lo, terms, diffs };
        debug_assert_eq!(c.diffs.len() + 1, c.terms.len().max(1));
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.iter().all(|&m| m == 0))
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn term(&self, degree: i64) -> Option<&Vec<usize>> {
        let k = degree - self.lo;
        if k < 0 {
            return None;
        }
        self.terms.get(k as usize)
    }

    pub fn diff(&self, degree: i64) -> Option<&ProjMorphism> {
        let k = degree - self.lo;
        if k < 0 {
            return None;
        }
        self.diffs.get(k as usize)
    }

    /// Drops zero terms at both ends (adjusting differentials).
    pub fn trimmed(&self) -> ProjComplex {
        let nonzero: Vec<usize> = self
            .terms
            .iter()
            .enumerate()
            .filter(|(_, t)| t.iter().any(|&m| m > 0))
            .map(|(i, _)| i)
            .collect();
        let (Some(&first), Some(&last)) = (nonzero.first(), nonzero.last()) else {
            return ProjComplex::zero(&self.alg);
        };
        ProjComplex {
            alg: Arc::clone(&self.alg),
            lo: self.lo + first as i64,
            terms: self.terms[first..=last].to_vec(),
            diffs: if last > first { self.diffs[first..last].to_vec() } else { Vec::new() },
        }
    }

    /// True iff consecutive differentials compose to zero.
    pub fn check_complex(&self) -> bool {
        self.first_noncomposing_pair().is_none()
    }

    pub fn first_noncomposing_pair(&self) -> Option<(i64, i64)> {
        for k in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[k].compose(&self.diffs[k + 1]).is_zero() {
                let d = self.lo + k as i64;
                return Some((d, d + 1));
            }
        }
        None
    }

    /// Membership in the subcategory of complexes whose differentials land
    /// in the radical.
    pub fn in_frak_p(&self) -> bool {
        self.check_complex() && self.diffs.iter().all(|d| d.radical_membership())
    }

    /// The translation `T^i`.
    pub fn shift(&self, i: i64) -> ProjComplex {
        let mut out = self.clone();
        out.lo -= i;
        if i.rem_euclid(2) == 1 {
            out.diffs = out.diffs.iter().map(|d| d.neg()).collect();
        }
        out
    }

    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let nv = self.alg.n_vertices();
        let mut terms = Vec::new();
        for d in lo..=hi {
            let a = self.term(d).cloned().unwrap_or_else(|| vec![0; nv]);
            let b = other.term(d).cloned().unwrap_or_else(|| vec![0; nv]);
            terms.push((0..nv).map(|v| a[v] + b[v]).collect::<Vec<_>>());
        }
        let mut diffs = Vec::new();
        for d in lo..hi {
            let src: Vec<usize> = terms[(d - lo) as usize].clone();
            let tgt: Vec<usize> = terms[(d - lo + 1) as usize].clone();
            let mut m = ProjMorphism::zero(&self.alg, src, tgt);
            place_block(&mut m, self, other, d);
            diffs.push(m);
        }
        ProjComplex { alg: Arc::clone(&self.alg), lo, terms, diffs }
    }

    /// Per-degree, per-vertex multiplicities; the graded invariant used as a
    /// cheap non-isomorphism certificate for minimal complexes.
    pub fn graded_multiplicities(&self) -> BTreeMap<i64, Vec<usize>> {
        self.degrees()
            .filter_map(|d| {
                let t = self.term(d).unwrap();
                if t.iter().any(|&m| m > 0) {
                    Some((d, t.clone()))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_module_complex(&self) -> ModuleComplex {
        let modules: Vec<ModuleRep> =
            self.terms.iter().map(|t| ModuleRep::projective_sum(&self.alg, t)).collect();
        let maps: Vec<ModuleMap> = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let mut mm = d.to_module_map();
                mm.src = modules[k].clone();
                mm.tgt = modules[k + 1].clone();
                mm
            })
            .collect();
        ModuleComplex { alg: Arc::clone(&self.alg), lo: self.lo, modules, maps }
    }

    pub fn cohomology(&self) -> CohomologyVector {
        self.to_module_complex().cohomology()
    }

    pub fn cohomology_modules(&self) -> Vec<(i64, ModuleRep)> {
        self.to_module_complex().cohomology_modules()
    }

    /// Kernel of the lowest differential (the whole bottom term for a
    /// single-term complex).
    pub fn bottom_kernel(&self) -> Result<ModuleRep, ComplexError> {
        let c = self.trimmed();
        if c.terms.is_empty() {
            return Err(ComplexError::ZeroComplex);
        }
        if c.diffs.is_empty() {
            return Ok(ModuleRep::projective_sum(&c.alg, &c.terms[0]));
        }
        let (k, _) = c.diffs[0].to_module_map().kernel();
        Ok(k)
    }
}

fn place_block(m: &mut ProjMorphism, a: &ProjComplex, b: &ProjComplex, d: i64) {
    // copies the degree-d differentials of a and b into the direct sum
    let nv = a.alg.n_vertices();
    let src_sum = summands(&m.src);
    let tgt_sum = summands(&m.tgt);
    // global position of the copy-th summand of vertex v
    let locate = |sum: &[usize], v: usize, copy: usize| -> usize {
        sum.iter()
            .enumerate()
            .filter(|(_, &sv)| sv == v)
            .map(|(i, _)| i)
            .nth(copy)
            .expect("summand layout")
    };
    for (part, cx) in [(0usize, a), (1usize, b)] {
        let (Some(ds), Some(dt)) = (cx.term(d), cx.term(d + 1)) else { continue };
        let Some(diff) = cx.diff(d) else { continue };
        let ssum = summands(ds);
        let tsum = summands(dt);
        // part 0 occupies the first a-term copies of each vertex
        let off_src: Vec<usize> = (0..nv)
            .map(|v| if part == 0 { 0 } else { a.term(d).map_or(0, |t| t[v]) })
            .collect();
        let off_tgt: Vec<usize> = (0..nv)
            .map(|v| if part == 0 { 0 } else { a.term(d + 1).map_or(0, |t| t[v]) })
            .collect();
        let mut copy_src = vec![0usize; nv];
        for (i, &u) in ssum.iter().enumerate() {
            let gi = locate(&src_sum, u, off_src[u] + copy_src[u]);
            copy_src[u] += 1;
            let mut copy_tgt = vec![0usize; nv];
            for (j, &v) in tsum.iter().enumerate() {
                let gj = locate(&tgt_sum, v, off_tgt[v] + copy_tgt[v]);
                copy_tgt[v] += 1;
                m.entries[gi][gj] = diff.entries[i][j].clone();
            }
        }
    }
}

/// A bounded complex of explicit module representations.
#[derive(Clone, Debug)]
pub struct ModuleComplex {
    pub alg: Arc<Algebra>,
    pub lo: i64,
    pub modules: Vec<ModuleRep>,
    pub maps: Vec<ModuleMap>,
}

impl ModuleComplex {
    pub fn check_complex(&self) -> bool {
        for k in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[k].compose(&self.maps[k + 1]).is_zero() {
                return false;
            }
        }
        true
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn cohomology_modules(&self) -> Vec<(i64, ModuleRep)> {
        let mut out = Vec::new();
        for k in 0..self.modules.len() {
            let f = if k > 0 { Some(&self.maps[k - 1]) } else { None };
            let g = if k < self.maps.len() { Some(&self.maps[k]) } else { None };
            let h = homology_at(f, &self.modules[k], g);
            out.push((self.lo + k as i64, h));
        }
        out
    }

    pub fn cohomology(&self) -> CohomologyVector {
        self.cohomology_modules()
            .into_iter()
            .filter(|(_, h)| !h.is_zero())
            .map(|(d, h)| (d, h.total_dim()))
            .collect()
    }
}

/// Good truncation: inserts the kernel of the lowest differential one degree
/// below the support, with its inclusion map.
pub fn good_truncate(c: &ProjComplex) -> Result<ModuleComplex, ComplexError> {
    let c = c.trimmed();
    if c.terms.is_empty() {
        return Err(ComplexError::ZeroComplex);
    }
    let mc = c.to_module_complex();
    let (kernel, incl) = if mc.maps.is_empty() {
        let id = ModuleMap::identity(&mc.modules[0]);
        (mc.modules[0].clone(), id)
    } else {
        mc.maps[0].kernel()
    };
    let mut modules = vec![kernel];
    modules.extend(mc.modules);
    let mut maps = vec![incl];
    maps.extend(mc.maps);
    Ok(ModuleComplex { alg: Arc::clone(&c.alg), lo: c.lo - 1, modules, maps })
}

/// Brutal truncation below the maximal degree `s` such that the term at `s`
/// is nonzero and all cohomology at degrees `<= s` vanishes. Degrees below
/// `assume_exact_below` are treated as exact, which is how finite windows of
/// left-infinite resolutions are truncated.
pub fn brutal_truncate(c: &ProjComplex, assume_exact_below: Option<i64>) -> Result<ProjComplex, ComplexError> {
    let c = c.trimmed();
    if c.terms.is_empty() {
        return Err(ComplexError::ZeroComplex);
    }
    let h = c.cohomology();
    let ok_below = |s: i64| -> bool {
        h.iter().all(|(&d, &dim)| {
            if d > s || dim == 0 {
                return true;
            }
            match assume_exact_below {
                Some(b) => d < b,
                None => false,
            }
        })
    };
    let s = c
        .degrees()
        .rev()
        .find(|&s| c.term(s).is_some_and(|t| t.iter().any(|&m| m > 0)) && ok_below(s))
        .ok_or(ComplexError::NoSuchS)?;
    let k = (s - c.lo) as usize;
    Ok(ProjComplex {
        alg: Arc::clone(&c.alg),
        lo: s,
        terms: c.terms[k..].to_vec(),
        diffs: c.diffs[k..].to_vec(),
    })
}

/// A minimal projective resolution prefix together with its syzygies.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Terms at degrees `-k..=0`; the degree-0 term covers the module.
    pub complex: ProjComplex,
    /// `syzygies[k]` is the kernel after `k` covers; `syzygies[0]` is the module.
    pub syzygies: Vec<ModuleRep>,
    pub terminated: bool,
}

/// Iterates projective covers up to `bound` steps.
pub fn minimal_resolution(m: &ModuleRep, bound: usize) -> Resolution {
    let alg = Arc::clone(&m.alg);
    let mut syzygies = vec![m.clone()];
    let mut mults: Vec<Vec<usize>> = Vec::new();
    let mut covers: Vec<ModuleMap> = Vec::new();
    let mut incls: Vec<ModuleMap> = Vec::new();
    for _ in 0..bound {
        let current = syzygies.last().unwrap();
        if current.is_zero() {
            break;
        }
        let (mult, cover) = current.projective_cover();
        let (syz, incl) = cover.kernel();
        mults.push(mult);
        covers.push(cover);
        incls.push(incl);
        syzygies.push(syz);
    }
    let terminated = syzygies.last().is_some_and(|s| s.is_zero());
    // differentials: P_{k+1} -> P_k is cover_{k+1} into syz_{k+1} followed by
    // the inclusion into P_k
    let mut diffs_by_step: Vec<ProjMorphism> = Vec::new();
    for k in 0..mults.len().saturating_sub(1) {
        let comp = covers[k + 1].compose(&incls[k]);
        let pm = ProjMorphism::from_module_map(&alg, &mults[k + 1], &mults[k], &comp);
        diffs_by_step.push(pm);
    }
    let n = mults.len();
    let terms: Vec<Vec<usize>> = (0..n).rev().map(|k| mults[k].clone()).collect();
    let diffs: Vec<ProjMorphism> = (0..diffs_by_step.len()).rev().map(|k| diffs_by_step[k].clone()).collect();
    let complex = if n == 0 {
        ProjComplex::zero(&alg)
    } else {
        ProjComplex { alg, lo: -(n as i64) + 1, terms, diffs }
    };
    debug_assert!(complex.check_complex());
    Resolution { complex, syzygies, terminated }
}

pub const PERFECT_BOUND: usize = 8;
pub const PERIODICITY_WINDOW: usize = 4;

#[derive(Clone, Debug)]
pub struct PerfectReport {
    pub perfect: bool,
    /// Indices `i < j` with isomorphic syzygies when periodic.
    pub periodicity: Option<(usize, usize)>,
    pub resolution: Resolution,
}

/// Decides whether a module has a bounded projective resolution. Periodic
/// syzygies certify "not perfect"; running out of steps without either
/// certificate is an error, never a silent "false".
pub fn is_perfect(m: &ModuleRep, seed: u64) -> Result<PerfectReport, ComplexError> {
    is_perfect_bounded(m, PERFECT_BOUND, PERIODICITY_WINDOW, seed)
}

pub fn is_perfect_bounded(
    m: &ModuleRep,
    bound: usize,
    window: usize,
    seed: u64,
) -> Result<PerfectReport, ComplexError> {
    let resolution = minimal_resolution(m, bound);
    if resolution.terminated {
        return Ok(PerfectReport { perfect: true, periodicity: None, resolution });
    }
    let syz = &resolution.syzygies;
    for j in 1..syz.len() {
        for i in j.saturating_sub(window)..j {
            if syz[i].total_dim() == syz[j].total_dim() && syz[i].is_isomorphic(&syz[j], seed)? {
                return Ok(PerfectReport { perfect: false, periodicity: Some((i, j)), resolution });
            }
        }
    }
    Err(ComplexError::Inconclusive { steps: bound, window })
}

#[derive(Clone, Debug)]
pub enum TruncationResolution {
    /// A bounded projective resolution of the good truncation.
    Perfect(ProjComplex),
    /// The added kernel has an infinite (periodic) resolution; the complex
    /// belongs to the extra family of the derived category.
    NotPerfect { kernel: ModuleRep, periodicity: (usize, usize) },
}

/// Decides whether the good truncation of a complex is again perfect, and
/// if so splices the kernel's finite resolution below the complex.
pub fn resolve_truncation(c: &ProjComplex, seed: u64) -> Result<TruncationResolution, ComplexError> {
    let c = c.trimmed();
    if c.terms.is_empty() {
        return Ok(TruncationResolution::Perfect(c));
    }
    let bottom_mult = c.terms[0].clone();
    let bottom = ModuleRep::projective_sum(&c.alg, &bottom_mult);
    let (kernel, kincl) = if c.diffs.is_empty() {
        (bottom.clone(), ModuleMap::identity(&bottom))
    } else {
        c.diffs[0].to_module_map().kernel()
    };
    if kernel.is_zero() {
        return Ok(TruncationResolution::Perfect(c));
    }
    let report = is_perfect(&kernel, seed)?;
    if !report.perfect {
        return Ok(TruncationResolution::NotPerfect {
            kernel,
            periodicity: report.periodicity.unwrap(),
        });
    }
    // splice the kernel's finite resolution below the bottom term
    let res = report.resolution;
    let rc = res.complex.trimmed();
    if rc.terms.is_empty() {
        return Ok(TruncationResolution::Perfect(c));
    }
    let (cover_mult, cover) = kernel.projective_cover();
    debug_assert_eq!(rc.terms.last().unwrap(), &cover_mult);
    let glue = cover.compose(&kincl);
    let glue_pm = ProjMorphism::from_module_map(&c.alg, &cover_mult, &bottom_mult, &glue);
    let mut terms = rc.terms.clone();
    let mut diffs = rc.diffs.clone();
    terms.extend(c.terms.iter().cloned());
    diffs.push(glue_pm);
    diffs.extend(c.diffs.iter().cloned());
    let lo = c.lo - rc.terms.len() as i64;
    let spliced = ProjComplex { alg: Arc::clone(&c.alg), lo, terms, diffs };
    debug_assert!(spliced.check_complex());
    Ok(TruncationResolution::Perfect(spliced))
}

/// The matrix of a whole degree's differential, for rank bookkeeping.
pub fn diff_matrix(c: &ProjComplex, degree: i64) -> Option<Mat> {
    c.diff(degree).map(|d| d.apply())
}

/// Scalar helper used by hand-built complexes.
pub fn one(alg: &Algebra) -> Scalar {
    Scalar::one(alg.field)
}

/// Reduced row space helper re-exported for tests.
pub fn subspace_of(m: &Mat) -> Subspace {
    Subspace::from_rows(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{AlgebraElement, Path, Quiver};
    use crate::scalar::Field;

    fn a2() -> Arc<Algebra> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                ("alpha".into(), "1".into(), "2".into()),
                ("beta".into(), "2".into(), "1".into()),
            ],
        )
        .unwrap();
        let rel = AlgebraElement::from_path(
            Field::Rationals,
            Path::from_arrow_names(&q, &["alpha", "beta"]).unwrap(),
        );
        Algebra::build(q, Field::Rationals, vec![rel]).unwrap()
    }

    fn p_alpha(alg: &Arc<Algebra>) -> ProjComplex {
        // P_1 --p(alpha)--> P_2 in degrees 1, 2
        let mut d = ProjMorphism::zero(alg, vec![1, 0], vec![0, 1]);
        d.set_entry(0, 0, alg.path_from_names(&["alpha"]).unwrap());
        ProjComplex::from_terms(alg, 1, vec![vec![1, 0], vec![0, 1]], vec![d])
    }

    #[test]
    fn stalk_is_a_complex() {
        let alg = a2();
        let c = ProjComplex::stalk(&alg, vec![1, 0], 0);
        assert!(c.check_complex());
        assert!(c.in_frak_p());
        let h = c.cohomology();
        assert_eq!(h.get(&0), Some(&2)); // dim P_1 = 2
    }

    #[test]
    fn identity_differential_not_in_frak_p() {
        let alg = a2();
        let d = ProjMorphism::identity(&alg, vec![1, 0]);
        let c = ProjComplex::from_terms(&alg, 0, vec![vec![1, 0], vec![1, 0]], vec![d]);
        assert!(c.check_complex());
        assert!(!c.in_frak_p());
        assert!(c.cohomology().is_empty());
    }

    #[test]
    fn p_alpha_cohomology() {
        let alg = a2();
        let c = p_alpha(&alg);
        assert!(c.in_frak_p());
        // kernel of p(alpha) is zero, cokernel is 1-dimensional
        let h = c.cohomology();
        assert_eq!(h.get(&1), None);
        assert_eq!(h.get(&2), Some(&1));
    }

    #[test]
    fn shift_reindexes_cohomology() {
        let alg = a2();
        let c = p_alpha(&alg);
        let h = c.cohomology();
        let hs = c.shift(3).cohomology();
        for (&d, &v) in &h {
            assert_eq!(hs.get(&(d - 3)), Some(&v));
        }
        let a = c.shift(1).shift(1);
        let b = c.shift(2);
        assert_eq!(a.lo, b.lo);
        assert_eq!(a.cohomology(), b.cohomology());
    }

    #[test]
    fn good_truncate_of_stalk() {
        let alg = a2();
        let c = ProjComplex::stalk(&alg, vec![0, 1], 1);
        let t = good_truncate(&c).unwrap();
        assert_eq!(t.lo, 0);
        assert_eq!(t.modules[0].total_dim(), 3); // kernel of the zero map is all of P_2
        assert!(t.cohomology().is_empty()); // acyclic after inserting the kernel
    }

    #[test]
    fn good_truncate_injective_bottom() {
        let alg = a2();
        let c = p_alpha(&alg);
        let t = good_truncate(&c).unwrap();
        assert!(t.modules[0].is_zero());
    }

    #[test]
    fn brutal_truncate_literal() {
        let alg = a2();
        // acyclic except nowhere: identity differential complex
        let d = ProjMorphism::identity(&alg, vec![1, 0]);
        let c = ProjComplex::from_terms(&alg, 0, vec![vec![1, 0], vec![1, 0]], vec![d]);
        let t = brutal_truncate(&c, None).unwrap();
        assert_eq!(t.lo, 1);
        assert_eq!(t.terms.len(), 1);
    }

    #[test]
    fn resolution_of_projective_is_trivial() {
        let alg = a2();
        let p = ModuleRep::projective(&alg, 0);
        let r = minimal_resolution(&p, 4);
        assert!(r.terminated);
        assert_eq!(r.complex.terms.len(), 1);
    }

    #[test]
    fn a2_simples_are_perfect() {
        let alg = a2();
        for v in 0..2 {
            let s = ModuleRep::simple(&alg, v);
            let rep = is_perfect(&s, 7).unwrap();
            assert!(rep.perfect, "simple at {v} must be perfect over A2");
        }
    }

    #[test]
    fn resolve_truncation_injective_bottom_is_identity() {
        let alg = a2();
        let c = p_alpha(&alg);
        match resolve_truncation(&c, 7).unwrap() {
            TruncationResolution::Perfect(p) => {
                assert_eq!(p.graded_multiplicities(), c.graded_multiplicities());
            }
            _ => panic!("expected perfect"),
        }
    }

    #[test]
    fn direct_sum_is_complex() {
        let alg = a2();
        let c = p_alpha(&alg).direct_sum(&p_alpha(&alg).shift(-1));
        assert!(c.check_complex());
        assert!(c.in_frak_p());
    }

    #[test]
    fn minimal_resolutions_have_radical_differentials() {
        let alg = a2();
        let s = ModuleRep::simple(&alg, 1);
        let r = minimal_resolution(&s, 6);
        assert!(r.complex.in_frak_p());
    }
}
