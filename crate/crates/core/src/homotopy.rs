//! Hom spaces of complexes, null-homotopic subspaces, and the
//! indecomposability / isomorphism oracle for minimal complexes.
//!
//! Chain maps are solved for exactly: the commuting condition is a linear
//! system over coordinates indexed by (degree, source summand, target
//! summand, basis path). Indecomposability of a complex is decided through
//! the endomorphism algebra in the category of complexes: the complex is
//! (absolutely) indecomposable iff `dim End / rad End = 1`. Over the
//! rationals the radical is the kernel of the trace form, which is exact;
//! this is the default oracle field. Isomorphism of minimal complexes is
//! decided deterministically: random invertible chain maps are only a fast
//! path for "yes", while the general decision compares the semisimple
//! endomorphism dimensions of `x (+) y`, `x (+) x` and `y (+) y`.

use crate::complex::ProjComplex;
use crate::module::{semisimple_quotient_dim, ModuleError};
use crate::proj::{summands, ProjMorphism};
use crate::scalar::Scalar;
use rand::Rng;
use std::collections::BTreeMap;

/// A chain map between two projective complexes, stored per degree.
/// Missing degrees are zero.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub components: BTreeMap<i64, ProjMorphism>,
}

impl ChainMap {
    fn zero() -> Self {
        ChainMap { components: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|m| m.is_zero())
    }
}

/// Coordinate chart for morphism collections between two fixed complexes:
/// one scalar per (degree, source summand, target summand, basis path from
/// the source vertex to the target vertex).
struct Chart {
    /// (degree, src summand, tgt summand, basis path index)
    slots: Vec<(i64, usize, usize, usize)>,
    offsets: BTreeMap<i64, usize>,
}

fn chart(x: &ProjComplex, y: &ProjComplex, y_degree_shift: i64) -> Chart {
    let mut slots = Vec::new();
    let mut offsets = BTreeMap::new();
    for d in x.degrees() {
        let Some(xt) = x.term(d) else { continue };
        let Some(yt) = y.term(d + y_degree_shift) else { continue };
        offsets.insert(d, slots.len());
        let xs = summands(xt);
        let ys = summands(yt);
        for (i, &u) in xs.iter().enumerate() {
            for (j, &v) in ys.iter().enumerate() {
                for (k, _) in x.alg.hom_paths(u, v).iter().enumerate() {
                    slots.push((d, i, j, k));
                }
            }
        }
    }
    Chart { slots, offsets }
}

fn materialize(x: &ProjComplex, y: &ProjComplex, shift: i64, ch: &Chart, coords: &[Scalar]) -> ChainMap {
    let mut comps: BTreeMap<i64, ProjMorphism> = BTreeMap::new();
    for (slot, (d, i, j, k)) in ch.slots.iter().enumerate() {
        let c = &coords[slot];
        if c.is_zero() {
            continue;
        }
        let m = comps.entry(*d).or_insert_with(|| {
            ProjMorphism::zero(&x.alg, x.term(*d).unwrap().clone(), y.term(*d + shift).unwrap().clone())
        });
        let u = summands(x.term(*d).unwrap())[*i];
        let v = summands(y.term(*d + shift).unwrap())[*j];
        let b = x.alg.hom_paths(u, v)[*k];
        let path = x.alg.basis[b].clone();
        let mut e = crate::quiver::AlgebraElement::zero(x.alg.field);
        e.add_term(c, path);
        m.entries[*i][*j] = m.entries[*i][*j].add(&e);
    }
    ChainMap { components: comps }
}

fn coords_of(x: &ProjComplex, y: &ProjComplex, shift: i64, ch: &Chart, f: &ChainMap) -> Vec<Scalar> {
    let field = x.alg.field;
    let mut coords = vec![Scalar::zero(field); ch.slots.len()];
    for (slot, (d, i, j, k)) in ch.slots.iter().enumerate() {
        let Some(m) = f.components.get(d) else { continue };
        let u = summands(x.term(*d).unwrap())[*i];
        let v = summands(y.term(*d + shift).unwrap())[*j];
        let bucket = x.alg.hom_paths(u, v);
        let e = x.alg.normalize(&m.entries[*i][*j]);
        let cs = x.alg.coords_in(&e, bucket);
        coords[slot] = cs[*k].clone();
    }
    coords
}

/// The defect of a would-be chain map: per degree, `f^d ∘ d_Y - d_X ∘ f^{d+1}`.
fn commuting_defect(x: &ProjComplex, y: &ProjComplex, f: &ChainMap) -> ChainMap {
    let mut out = ChainMap::zero();
    for d in x.lo - 1..=x.hi() + 1 {
        let (Some(xt), Some(yt)) = (x.term(d), y.term(d + 1)) else { continue };
        let mut defect = ProjMorphism::zero(&x.alg, xt.clone(), yt.clone());
        let mut any = false;
        if let (Some(fd), Some(dy)) = (f.components.get(&d), y.diff(d)) {
            defect = defect.add(&fd.compose(dy));
            any = true;
        }
        if let (Some(dx), Some(fd1)) = (x.diff(d), f.components.get(&(d + 1))) {
            defect = defect.add(&dx.compose(fd1).neg());
            any = true;
        }
        if any && !defect.is_zero() {
            out.components.insert(d, defect);
        } else if any {
            out.components.insert(d, defect);
        }
    }
    out
}

/// Basis data for `Hom` between two complexes: the chain-map space and its
/// null-homotopic subspace.
pub struct ChainMapSpace {
    pub chain_maps: Vec<ChainMap>,
    pub dim_chain: usize,
    pub dim_null_homotopic: usize,
}

impl ChainMapSpace {
    pub fn dim_hom_k(&self) -> usize {
        self.dim_chain - self.dim_null_homotopic
    }
}

/// Solves the linear systems for chain maps and homotopies.
pub fn hom_complex(x: &ProjComplex, y: &ProjComplex) -> ChainMapSpace {
    assert!(*x.alg == *y.alg, "hom requires one algebra");
    let field = x.alg.field;
    let ch0 = chart(x, y, 0);
    let ch1 = chart(x, y, 1);
    if ch0.slots.is_empty() {
        return ChainMapSpace { chain_maps: Vec::new(), dim_chain: 0, dim_null_homotopic: 0 };
    }
    // constraint matrix: rows = unknowns, cols = defect coordinates
    let mut t = crate::mat::Mat::zero(field, ch0.slots.len(), ch1.slots.len());
    for u in 0..ch0.slots.len() {
        let mut coords = vec![Scalar::zero(field); ch0.slots.len()];
        coords[u] = Scalar::one(field);
        let f = materialize(x, y, 0, &ch0, &coords);
        let defect = commuting_defect(x, y, &f);
        for (col, c) in coords_of(x, y, 1, &ch1, &defect).into_iter().enumerate() {
            t.set(u, col, c);
        }
    }
    let kernel = t.left_kernel();
    let chain_maps: Vec<ChainMap> = (0..kernel.rows())
        .map(|r| {
            let coords: Vec<Scalar> = (0..ch0.slots.len()).map(|k| kernel.get(r, k).clone()).collect();
            materialize(x, y, 0, &ch0, &coords)
        })
        .collect();

    // homotopies: s with s^d : X^d -> Y^{d-1}; induced chain map
    // f^d = s^d ∘ d_Y^{d-1} + d_X^d ∘ s^{d+1}
    let chm = chart(x, y, -1);
    let mut induced_rows: Vec<Vec<Scalar>> = Vec::new();
    for u in 0..chm.slots.len() {
        let mut coords = vec![Scalar::zero(field); chm.slots.len()];
        coords[u] = Scalar::one(field);
        let s = materialize(x, y, -1, &chm, &coords);
        let mut f = ChainMap::zero();
        for d in x.degrees() {
            let (Some(xt), Some(yt)) = (x.term(d), y.term(d)) else { continue };
            let mut comp = ProjMorphism::zero(&x.alg, xt.clone(), yt.clone());
            if let Some(sd) = s.components.get(&d) {
                if let Some(dy) = y.diff(d - 1) {
                    comp = comp.add(&sd.compose(dy));
                }
            }
            if let (Some(dx), Some(sd1)) = (x.diff(d), s.components.get(&(d + 1))) {
                comp = comp.add(&dx.compose(sd1));
            }
            if !comp.is_zero() {
                f.components.insert(d, comp);
            }
        }
        induced_rows.push(coords_of(x, y, 0, &ch0, &f));
    }
    let dim_null_homotopic = if induced_rows.is_empty() {
        0
    } else {
        let mut m = crate::mat::Mat::zero(field, induced_rows.len(), ch0.slots.len());
        for (i, row) in induced_rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        m.rank()
    };
    ChainMapSpace { dim_chain: chain_maps.len(), chain_maps, dim_null_homotopic }
}

/// Composition of chain maps `x -> y -> z`.
pub fn compose_chain_maps(f: &ChainMap, g: &ChainMap) -> ChainMap {
    let mut out = ChainMap::zero();
    for (d, fd) in &f.components {
        if let Some(gd) = g.components.get(d) {
            let c = fd.compose(gd);
            if !c.is_zero() {
                out.components.insert(*d, c);
            }
        }
    }
    out
}

/// `dim End(x) / rad End(x)` in the category of complexes, over the session
/// field. An error is only possible in prime-field mode.
pub fn end_semisimple_dim(x: &ProjComplex) -> Result<usize, ModuleError> {
    let x = x.trimmed();
    if x.is_zero() {
        return Ok(0);
    }
    let space = hom_complex(&x, &x);
    let ch = chart(&x, &x, 0);
    semisimple_quotient_dim(
        &space.chain_maps,
        compose_chain_maps,
        |f| coords_of(&x, &x, 0, &ch, f),
        x.alg.field,
    )
}

/// A nonzero minimal complex is indecomposable iff its endomorphism ring is
/// local; over the default rational oracle this is `dim End/rad = 1`
/// (absolute indecomposability).
pub fn is_indecomposable(x: &ProjComplex) -> Result<bool, ModuleError> {
    let x = x.trimmed();
    if x.is_zero() {
        return Ok(false);
    }
    Ok(end_semisimple_dim(&x)? == 1)
}

/// Isomorphism in the homotopy category, which for minimal complexes is
/// isomorphism in the category of complexes.
pub fn is_isomorphic_k(x: &ProjComplex, y: &ProjComplex, seed: u64) -> Result<bool, ModuleError> {
    let x = x.trimmed();
    let y = y.trimmed();
    if x.is_zero() || y.is_zero() {
        return Ok(x.is_zero() && y.is_zero());
    }
    if x.graded_multiplicities() != y.graded_multiplicities() {
        return Ok(false);
    }
    // fast path: sample for an invertible chain map
    let space = hom_complex(&x, &y);
    if space.dim_chain > 0 {
        let mut rng = crate::seeded_rng(seed);
        for _ in 0..8 {
            let f = random_combo(&space.chain_maps, &x, &mut rng);
            if chain_map_invertible(&x, &f) {
                return Ok(true);
            }
        }
    }
    // deterministic decision via Krull-Schmidt multiplicity counts
    let exy = end_semisimple_dim(&x.direct_sum(&y))?;
    let exx = end_semisimple_dim(&x.direct_sum(&x))?;
    let eyy = end_semisimple_dim(&y.direct_sum(&y))?;
    Ok(exy == exx && exy == eyy)
}

fn random_combo(basis: &[ChainMap], x: &ProjComplex, rng: &mut impl Rng) -> ChainMap {
    let field = x.alg.field;
    let mut out = ChainMap::zero();
    for f in basis {
        let c = Scalar::from_i64(field, rng.gen_range(-3i64..=3));
        if c.is_zero() {
            continue;
        }
        for (d, m) in &f.components {
            let scaled = m.scale(&c);
            match out.components.get_mut(d) {
                Some(acc) => *acc = acc.add(&scaled),
                None => {
                    out.components.insert(*d, scaled);
                }
            }
        }
    }
    out
}

fn chain_map_invertible(x: &ProjComplex, f: &ChainMap) -> bool {
    for d in x.degrees() {
        let t = x.term(d).unwrap();
        if t.iter().all(|&m| m == 0) {
            continue;
        }
        match f.components.get(&d) {
            Some(m) => {
                if !m.apply().is_invertible() {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::quiver::{AlgebraElement, Path, Quiver};
    use crate::scalar::Field;
    use std::sync::Arc;

    fn a1() -> Arc<Algebra> {
        let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
        Algebra::build(q, Field::Rationals, vec![]).unwrap()
    }

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
        let mut d = ProjMorphism::zero(alg, vec![1, 0], vec![0, 1]);
        d.set_entry(0, 0, alg.path_from_names(&["alpha"]).unwrap());
        ProjComplex::from_terms(alg, 1, vec![vec![1, 0], vec![0, 1]], vec![d])
    }

    fn p_beta(alg: &Arc<Algebra>) -> ProjComplex {
        let mut d = ProjMorphism::zero(alg, vec![0, 1], vec![1, 0]);
        d.set_entry(0, 0, alg.path_from_names(&["beta"]).unwrap());
        ProjComplex::from_terms(alg, 1, vec![vec![0, 1], vec![1, 0]], vec![d])
    }

    #[test]
    fn end_of_simple_stalk() {
        let alg = a1();
        let c = ProjComplex::stalk(&alg, vec![1], 0);
        let space = hom_complex(&c, &c);
        assert_eq!(space.dim_hom_k(), 1);
        assert!(is_indecomposable(&c).unwrap());
    }

    #[test]
    fn disjoint_supports_have_no_homs() {
        let alg = a2();
        let c = p_alpha(&alg);
        let s = c.shift(5);
        let space = hom_complex(&c, &s);
        assert_eq!(space.dim_hom_k(), 0);
    }

    #[test]
    fn stalk_sum_decomposes() {
        let alg = a2();
        let c = ProjComplex::stalk(&alg, vec![1, 0], 0);
        assert!(is_indecomposable(&c).unwrap());
        let cc = c.direct_sum(&c.clone());
        assert!(!is_indecomposable(&cc).unwrap());
    }

    #[test]
    fn iso_reflexive_and_distinguishes() {
        let alg = a2();
        let a = p_alpha(&alg);
        let b = p_beta(&alg);
        assert!(is_isomorphic_k(&a, &a, 11).unwrap());
        assert!(!is_isomorphic_k(&a, &b, 11).unwrap());
        assert!(!is_isomorphic_k(&a, &a.shift(1), 11).unwrap());
    }

    #[test]
    fn brick_implies_indecomposable() {
        let alg = a2();
        let a = p_alpha(&alg);
        let space = hom_complex(&a, &a);
        if space.dim_hom_k() == 1 {
            assert!(is_indecomposable(&a).unwrap());
        }
    }
}
