//! Finite-dimensional path algebras `kQ/I` with computed normal forms.
//!
//! All supported relations are homogeneous in path length (every relation in
//! the algebra catalog is), so the ideal is graded by length. The basis is
//! computed level by level: at length `l` the span of `u * r * v` inside the
//! length-`l` path space is reduced to echelon form; pivot paths are
//! reducible and the rest are normal forms. Once a whole level dies every
//! longer level dies too, which is the finite-dimensionality certificate.

use crate::mat::Mat;
use crate::quiver::{path_key, AlgebraElement, Path, Quiver, VertexId};
use crate::scalar::{Field, Scalar};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_LENGTH_BOUND: usize = 12;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("ill-formed relation: {0}")]
    IllFormedRelation(String),
    #[error("no new normal forms must appear beyond length {0}, but levels keep growing: infinite-dimensional suspected")]
    InfiniteDimensionalSuspected(usize),
}

/// One reduced relation row inside a graded component: a pivot path plus the
/// normal-form tail it rewrites to.
#[derive(Clone, Debug)]
struct ReductionRow {
    pivot: Path,
    /// x  ->  x - coeff(pivot) * (pivot + tail), i.e. pivot ≡ -tail.
    tail: Vec<(Scalar, Path)>,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    pub quiver: Quiver,
    pub field: Field,
    pub relations: Vec<AlgebraElement>,
    /// Normal-form basis paths in length-lex order.
    pub basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    /// Reduction rows keyed by pivot path.
    reductions: HashMap<Path, ReductionRow>,
    /// First length at which every path reduces to zero.
    dead_length: usize,
    /// Basis paths from u to v, by (u, v).
    hom_buckets: HashMap<(VertexId, VertexId), Vec<usize>>,
    /// Basis paths with target v (the underlying basis of the projective P_v).
    ending_at: Vec<Vec<usize>>,
}

impl Algebra {
    pub fn build(quiver: Quiver, field: Field, relations: Vec<AlgebraElement>) -> Result<Arc<Self>, AlgebraError> {
        Self::build_bounded(quiver, field, relations, DEFAULT_LENGTH_BOUND)
    }

    pub fn build_bounded(
        quiver: Quiver,
        field: Field,
        relations: Vec<AlgebraElement>,
        length_bound: usize,
    ) -> Result<Arc<Self>, AlgebraError> {
        // validate relations: nonzero, homogeneous in (src, tgt, length), terms of length >= 1
        for (k, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(AlgebraError::IllFormedRelation(format!("relation {k} is zero")));
            }
            let mut sig: Option<(VertexId, VertexId, usize)> = None;
            for p in r.terms.keys() {
                p.validate(&quiver).map_err(|e| AlgebraError::IllFormedRelation(e))?;
                if p.is_trivial() {
                    return Err(AlgebraError::IllFormedRelation(format!(
                        "relation {k} contains a trivial path"
                    )));
                }
                let s = (p.src, p.tgt(&quiver), p.len());
                match sig {
                    None => sig = Some(s),
                    Some(prev) if prev != s => {
                        return Err(AlgebraError::IllFormedRelation(format!(
                            "relation {k} mixes sources, targets or lengths; homogeneous relations required"
                        )))
                    }
                    _ => {}
                }
            }
        }

        // paths by length
        let mut by_len: Vec<Vec<Path>> = Vec::new();
        by_len.push((0..quiver.n_vertices()).map(Path::trivial).collect());

        let mut basis: Vec<Path> = by_len[0].clone();
        let mut reductions: HashMap<Path, ReductionRow> = HashMap::new();
        let mut dead_length = None;

        for l in 1..=length_bound {
            // generate all paths of length l by extending length l-1 paths
            let mut level: Vec<Path> = Vec::new();
            for p in &by_len[l - 1] {
                let end = p.tgt(&quiver);
                for (aid, _a) in quiver.arrows_from(end) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(aid);
                    level.push(Path { src: p.src, arrows });
                }
            }
            level.sort_by_key(path_key);
            by_len.push(level.clone());

            if level.is_empty() {
                dead_length = Some(l);
                break;
            }

            // span of u * r * v at this level, per (src, tgt) block to keep
            // the elimination small
            let rows = ideal_rows_at_level(&quiver, field, &relations, &by_len, l);
            let (nf, red) = reduce_level(&quiver, field, &level, rows);
            for r in red {
                reductions.insert(r.pivot.clone(), r);
            }
            if nf.is_empty() {
                dead_length = Some(l);
                break;
            }
            basis.extend(nf.iter().cloned());
        }

        let dead_length = dead_length.ok_or(AlgebraError::InfiniteDimensionalSuspected(length_bound))?;

        basis.sort_by_key(path_key);
        let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut hom_buckets: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
        let mut ending_at: Vec<Vec<usize>> = vec![Vec::new(); quiver.n_vertices()];
        for (i, p) in basis.iter().enumerate() {
            let t = p.tgt(&quiver);
            hom_buckets.entry((p.src, t)).or_default().push(i);
            ending_at[t].push(i);
        }

        let alg = Algebra {
            quiver,
            field,
            relations,
            basis,
            basis_index,
            reductions,
            dead_length,
            hom_buckets,
            ending_at,
        };

        // every relation must normalize to zero
        for r in alg.relations.clone() {
            debug_assert!(alg.normalize(&r).is_zero(), "relation does not normalize to zero");
        }
        Ok(Arc::new(alg))
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    /// Unique normal form modulo the relation ideal.
    pub fn normalize(&self, e: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        let mut queue: Vec<(Scalar, Path)> = e.terms.iter().map(|(p, c)| (c.clone(), p.clone())).collect();
        while let Some((c, p)) = queue.pop() {
            if c.is_zero() {
                continue;
            }
            if p.len() >= self.dead_length {
                continue;
            }
            if self.basis_index.contains_key(&p) {
                out.add_term(&c, p);
            } else if let Some(row) = self.reductions.get(&p) {
                // pivot ≡ -tail
                for (tc, tp) in &row.tail {
                    queue.push((c.mul(&tc.neg()), tp.clone()));
                }
            } else {
                // a path of living length that is neither basis nor pivot
                // cannot occur: every path at a living level is classified
                unreachable!("unclassified path of length {}", p.len());
            }
        }
        out
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.normalize(&a.mul_formal(&self.quiver, b))
    }

    /// Indices into `basis` of the normal-form paths from `u` to `v`.
    pub fn hom_paths(&self, u: VertexId, v: VertexId) -> &[usize] {
        self.hom_buckets.get(&(u, v)).map_or(&[], |v| v.as_slice())
    }

    /// Indices into `basis` of the paths ending at `v`; these index the
    /// underlying space of the projective `P_v`.
    pub fn projective_basis(&self, v: VertexId) -> &[usize] {
        &self.ending_at[v]
    }

    pub fn projective_dim(&self, v: VertexId) -> usize {
        self.ending_at[v].len()
    }

    /// Dimension vector of `P_v`: at vertex `w`, the number of basis paths
    /// from `w` to `v`.
    pub fn projective_dim_vector(&self, v: VertexId) -> Vec<usize> {
        (0..self.n_vertices()).map(|w| self.hom_paths(w, v).len()).collect()
    }

    /// Expands an element into coordinates over the basis paths listed in
    /// `bucket` (asserting its support lies there).
    pub fn coords_in(&self, e: &AlgebraElement, bucket: &[usize]) -> Vec<Scalar> {
        let mut coords = vec![Scalar::zero(self.field); bucket.len()];
        let pos: HashMap<usize, usize> = bucket.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        for (p, c) in &e.terms {
            let idx = self.basis_index.get(p).expect("element not in normal form");
            let k = pos.get(idx).expect("element outside the expected bucket");
            coords[*k] = c.clone();
        }
        coords
    }

    pub fn element_from_coords(&self, bucket: &[usize], coords: &[Scalar]) -> AlgebraElement {
        let mut e = AlgebraElement::zero(self.field);
        for (k, &b) in bucket.iter().enumerate() {
            e.add_term(&coords[k], self.basis[b].clone());
        }
        e
    }

    /// The matrix of right multiplication `P_u -> P_v, x -> x * a` for an
    /// element `a` supported on paths `u -> v`, over the projective bases.
    pub fn right_multiplication(&self, u: VertexId, v: VertexId, a: &AlgebraElement) -> Mat {
        let src = self.projective_basis(u);
        let tgt = self.projective_basis(v);
        let tgt_pos: HashMap<usize, usize> = tgt.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut m = Mat::zero(self.field, src.len(), tgt.len());
        for (i, &bi) in src.iter().enumerate() {
            let q = AlgebraElement::from_path(self.field, self.basis[bi].clone());
            let prod = self.mul(&q, a);
            for (p, c) in &prod.terms {
                let idx = self.basis_index[p];
                let j = tgt_pos[&idx];
                m.set(i, j, c.clone());
            }
        }
        m
    }

    /// The matrix of the left action of `a` (supported on paths `u -> v`)
    /// on a projective: maps the vertex-`v` component into the vertex-`u`
    /// component. Used to build module representations.
    pub fn left_action_on_projective(&self, pv: VertexId, a_src: VertexId, a_tgt: VertexId, a: &AlgebraElement) -> Mat {
        let from = self.hom_paths(a_tgt, pv);
        let to = self.hom_paths(a_src, pv);
        let to_pos: HashMap<usize, usize> = to.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut m = Mat::zero(self.field, from.len(), to.len());
        for (i, &bi) in from.iter().enumerate() {
            let q = AlgebraElement::from_path(self.field, self.basis[bi].clone());
            let prod = self.mul(a, &q);
            for (p, c) in &prod.terms {
                let idx = self.basis_index[p];
                let j = to_pos[&idx];
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn path_from_names(&self, names: &[&str]) -> Result<AlgebraElement, String> {
        let p = Path::from_arrow_names(&self.quiver, names)?;
        Ok(self.normalize(&AlgebraElement::from_path(self.field, p)))
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.field == other.field && self.relations == other.relations
    }
}

fn ideal_rows_at_level(
    quiver: &Quiver,
    field: Field,
    relations: &[AlgebraElement],
    by_len: &[Vec<Path>],
    l: usize,
) -> Vec<AlgebraElement> {
    let mut rows = Vec::new();
    for r in relations {
        let first = r.terms.keys().next().unwrap();
        let k = first.len();
        if k > l {
            continue;
        }
        let r_src = first.src;
        let r_tgt = first.tgt(quiver);
        for a in 0..=(l - k) {
            let b = l - k - a;
            for u in &by_len[a] {
                if u.tgt(quiver) != r_src {
                    continue;
                }
                for w in &by_len[b] {
                    if w.src != r_tgt {
                        continue;
                    }
                    // u * r * w
                    let mut row = AlgebraElement::zero(field);
                    for (p, c) in &r.terms {
                        let up = u.compose(quiver, p).unwrap();
                        let upw = up.compose(quiver, w).unwrap();
                        row.add_term(c, upw);
                    }
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    rows
}

/// Reduces the relation span inside one length level. Returns the surviving
/// normal-form paths and the reduction rows (pivot -> tail).
fn reduce_level(
    quiver: &Quiver,
    field: Field,
    level: &[Path],
    rows: Vec<AlgebraElement>,
) -> (Vec<Path>, Vec<ReductionRow>) {
    let _ = quiver;
    if rows.is_empty() {
        return (level.to_vec(), Vec::new());
    }
    let index: BTreeMap<Path, usize> = level.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = level.len();
    let mut mat = Mat::zero(field, rows.len(), n);
    for (i, row) in rows.iter().enumerate() {
        for (p, c) in &row.terms {
            let j = index[p];
            mat.set(i, j, c.clone());
        }
    }
    // pivots chosen on the length-lex largest path first so that reductions
    // rewrite toward lex-smaller paths
    let rev = Mat::from_fn(field, mat.rows(), n, |i, j| mat.get(i, n - 1 - j).clone());
    let (rref, pivots) = rev.rref();
    let mut reducible = vec![false; n];
    let mut reduction_rows = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        let pivot_col = n - 1 - pc;
        reducible[pivot_col] = true;
        let mut tail = Vec::new();
        for j in 0..n {
            if j == pc {
                continue;
            }
            let c = rref.get(row, j);
            if !c.is_zero() {
                tail.push((c.clone(), level[n - 1 - j].clone()));
            }
        }
        reduction_rows.push(ReductionRow { pivot: level[pivot_col].clone(), tail });
    }
    let nf = level.iter().enumerate().filter(|(i, _)| !reducible[*i]).map(|(_, p)| p.clone()).collect();
    (nf, reduction_rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q_field() -> Field {
        Field::Rationals
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
        // the loop at vertex 1 vanishes: alpha then beta
        let alpha_beta = AlgebraElement::from_path(q_field(), Path::from_arrow_names(&q, &["alpha", "beta"]).unwrap());
        Algebra::build(q, q_field(), vec![alpha_beta]).unwrap()
    }

    #[test]
    fn a2_dimension_and_basis() {
        let a = a2();
        assert_eq!(a.dimension(), 5);
        // basis: e1, e2, alpha, beta, beta*alpha (the loop at 2)
        let names: Vec<String> = a.basis.iter().map(|p| p.display(&a.quiver)).collect();
        assert!(names.contains(&"e_1".to_string()));
        assert!(names.contains(&"betaalpha".to_string()));
        assert_eq!(a.projective_dim(1), 3);
        assert_eq!(a.projective_dim(0), 2);
    }

    #[test]
    fn one_vertex_no_arrows() {
        let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
        let a = Algebra::build(q, q_field(), vec![]).unwrap();
        assert_eq!(a.dimension(), 1);
    }

    #[test]
    fn relations_normalize_to_zero() {
        let a = a2();
        for r in &a.relations {
            assert!(a.normalize(r).is_zero());
        }
    }

    #[test]
    fn trivial_path_unit_law() {
        let a = a2();
        let e1 = AlgebraElement::from_path(a.field, Path::trivial(0));
        let alpha = a.path_from_names(&["alpha"]).unwrap();
        assert_eq!(a.mul(&e1, &alpha), alpha);
    }

    #[test]
    fn loop_squared_vanishes() {
        let a = a2();
        let loop2 = a.path_from_names(&["beta", "alpha", "beta", "alpha"]).unwrap();
        assert!(loop2.is_zero());
    }

    #[test]
    fn normalize_is_idempotent() {
        let a = a2();
        let x = a.path_from_names(&["beta", "alpha"]).unwrap();
        assert_eq!(a.normalize(&x), x);
    }

    #[test]
    fn infinite_dimensional_detected() {
        let q = Quiver::new(vec!["1".into()], vec![("l".into(), "1".into(), "1".into())]).unwrap();
        match Algebra::build(q, q_field(), vec![]) {
            Err(AlgebraError::InfiniteDimensionalSuspected(_)) => {}
            other => panic!("expected infinite-dimensional error, got {other:?}"),
        }
    }

    #[test]
    fn binomial_relation_rewrites() {
        // commutative square: two paths identified
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "4".into()),
                ("c".into(), "1".into(), "3".into()),
                ("d".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap();
        let f = q_field();
        let ab = AlgebraElement::from_path(f, Path::from_arrow_names(&q, &["a", "b"]).unwrap());
        let cd = AlgebraElement::from_path(f, Path::from_arrow_names(&q, &["c", "d"]).unwrap());
        let alg = Algebra::build(q, f, vec![ab.sub(&cd)]).unwrap();
        // e's + 4 arrows + 1 surviving length-2 class
        assert_eq!(alg.dimension(), 9);
        let x = alg.path_from_names(&["a", "b"]).unwrap();
        let y = alg.path_from_names(&["c", "d"]).unwrap();
        assert_eq!(x, y);
    }
}
