//! Morphisms between direct sums of indecomposable projectives, given by
//! grids of algebra elements.
//!
//! A morphism `P_u -> P_v` of left projectives is right multiplication by an
//! element of `e_u A e_v` (paths from `u` to `v`). Sums of projectives are
//! described by a multiplicity vector per vertex, with summands laid out
//! vertex-ascending; the entry grid is indexed rows-by-source-summand and
//! columns-by-target-summand, matching the block matrices of the paper
//! displays and the row-vector matrix convention of [`crate::mat`].

use crate::algebra::Algebra;
use crate::mat::Mat;
use crate::module::{ModuleMap, ModuleRep};
use crate::quiver::{AlgebraElement, Path, VertexId};
use crate::scalar::Scalar;
use std::sync::Arc;

/// Expanded summand list for a multiplicity vector: vertex of each summand.
pub fn summands(mult: &[usize]) -> Vec<VertexId> {
    let mut out = Vec::new();
    for (v, &m) in mult.iter().enumerate() {
        for _ in 0..m {
            out.push(v);
        }
    }
    out
}

pub fn total_projective_dim(alg: &Algebra, mult: &[usize]) -> usize {
    mult.iter().enumerate().map(|(v, &m)| m * alg.projective_dim(v)).sum()
}

#[derive(Clone, Debug)]
pub struct ProjMorphism {
    pub alg: Arc<Algebra>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// entries[i][j] lies in paths `src_summand_i -> tgt_summand_j`.
    pub entries: Vec<Vec<AlgebraElement>>,
}

impl ProjMorphism {
    pub fn zero(alg: &Arc<Algebra>, src: Vec<usize>, tgt: Vec<usize>) -> Self {
        let ns = summands(&src).len();
        let nt = summands(&tgt).len();
        let entries = vec![vec![AlgebraElement::zero(alg.field); nt]; ns];
        ProjMorphism { alg: Arc::clone(alg), src, tgt, entries }
    }

    pub fn identity(alg: &Arc<Algebra>, mult: Vec<usize>) -> Self {
        let mut m = ProjMorphism::zero(alg, mult.clone(), mult);
        let sums = summands(&m.src);
        for (i, &v) in sums.iter().enumerate() {
            m.entries[i][i] = AlgebraElement::from_path(alg.field, Path::trivial(v));
        }
        m
    }

    pub fn set_entry(&mut self, i: usize, j: usize, e: AlgebraElement) {
        self.entries[i][j] = self.alg.normalize(&e);
    }

    /// Validates that every entry is supported on paths with the endpoints
    /// dictated by its summand pair.
    pub fn validate(&self) -> Result<(), String> {
        let ss = summands(&self.src);
        let ts = summands(&self.tgt);
        if self.entries.len() != ss.len() {
            return Err("entry grid rows mismatch".into());
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != ts.len() {
                return Err(format!("entry grid cols mismatch in row {i}"));
            }
            for (j, e) in row.iter().enumerate() {
                for p in e.terms.keys() {
                    if p.src != ss[i] || p.tgt(&self.alg.quiver) != ts[j] {
                        return Err(format!(
                            "entry ({i},{j}) contains a path with wrong endpoints"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|e| self.alg.normalize(e).is_zero()))
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &ProjMorphism) -> ProjMorphism {
        assert_eq!(self.tgt, other.src, "composition summand mismatch");
        let ss = summands(&self.src);
        let ms = summands(&self.tgt);
        let ts = summands(&other.tgt);
        let mut out = ProjMorphism::zero(&self.alg, self.src.clone(), other.tgt.clone());
        for i in 0..ss.len() {
            for j in 0..ts.len() {
                let mut acc = AlgebraElement::zero(self.alg.field);
                for k in 0..ms.len() {
                    let prod = self.alg.mul(&self.entries[i][k], &other.entries[k][j]);
                    acc = acc.add(&prod);
                }
                out.entries[i][j] = self.alg.normalize(&acc);
            }
        }
        out
    }

    pub fn add(&self, other: &ProjMorphism) -> ProjMorphism {
        assert_eq!(self.src, other.src);
        assert_eq!(self.tgt, other.tgt);
        let mut out = self.clone();
        for (ri, row) in other.entries.iter().enumerate() {
            for (ci, e) in row.iter().enumerate() {
                out.entries[ri][ci] = self.alg.normalize(&out.entries[ri][ci].add(e));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> ProjMorphism {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.scale(c);
            }
        }
        out
    }

    pub fn neg(&self) -> ProjMorphism {
        self.scale(&Scalar::one(self.alg.field).neg())
    }

    /// True iff no entry has a nonzero coefficient on a trivial path, i.e.
    /// the image lies in the radical.
    pub fn radical_membership(&self) -> bool {
        self.entries.iter().flatten().all(|e| !self.alg.normalize(e).has_trivial_component())
    }

    /// The matrix of the induced linear map on underlying spaces.
    pub fn apply(&self) -> Mat {
        let ss = summands(&self.src);
        let ts = summands(&self.tgt);
        let rdim = total_projective_dim(&self.alg, &self.src);
        let cdim = total_projective_dim(&self.alg, &self.tgt);
        let mut m = Mat::zero(self.alg.field, rdim, cdim);
        let mut r0 = 0;
        for (i, &u) in ss.iter().enumerate() {
            let mut c0 = 0;
            for (j, &v) in ts.iter().enumerate() {
                let block = self.alg.right_multiplication(u, v, &self.alg.normalize(&self.entries[i][j]));
                m.set_block(r0, c0, &block);
                c0 += self.alg.projective_dim(v);
            }
            r0 += self.alg.projective_dim(u);
        }
        m
    }

    /// The source as an explicit module representation. The layout agreesWith
    /// `ModuleRep::projective_sum` on the multiplicity vector.
    pub fn source_module(&self) -> ModuleRep {
        ModuleRep::projective_sum(&self.alg, &self.src)
    }

    pub fn target_module(&self) -> ModuleRep {
        ModuleRep::projective_sum(&self.alg, &self.tgt)
    }

    /// The induced equivariant map between the explicit representations.
    pub fn to_module_map(&self) -> ModuleMap {
        let src = self.source_module();
        let tgt = self.target_module();
        let field = self.alg.field;
        let ss = summands(&self.src);
        let ts = summands(&self.tgt);
        let nv = self.alg.n_vertices();
        let mut mats = Vec::with_capacity(nv);
        for w in 0..nv {
            let mut m = Mat::zero(field, src.dims[w], tgt.dims[w]);
            let mut r0 = 0;
            for (i, &u) in ss.iter().enumerate() {
                let rows = self.alg.hom_paths(w, u).len();
                let mut c0 = 0;
                for (j, &v) in ts.iter().enumerate() {
                    let cols = self.alg.hom_paths(w, v).len();
                    let e = self.alg.normalize(&self.entries[i][j]);
                    if !e.is_zero() {
                        // basis path q: w->u maps to q * e expanded over paths w->v
                        let bucket_u = self.alg.hom_paths(w, u);
                        let bucket_v = self.alg.hom_paths(w, v);
                        for (ri, &b) in bucket_u.iter().enumerate() {
                            let q = AlgebraElement::from_path(field, self.alg.basis[b].clone());
                            let prod = self.alg.mul(&q, &e);
                            let coords = self.alg.coords_in(&prod, bucket_v);
                            for (ci, cval) in coords.into_iter().enumerate() {
                                if !cval.is_zero() {
                                    m.set(r0 + ri, c0 + ci, cval);
                                }
                            }
                        }
                    }
                    c0 += cols;
                }
                r0 += rows;
            }
            mats.push(m);
        }
        let mm = ModuleMap { src, tgt, mats };
        debug_assert!(mm.check_equivariance().is_ok());
        mm
    }

    /// Reads a morphism off an equivariant map between projective sums laid
    /// out by `ModuleRep::projective_sum`.
    pub fn from_module_map(
        alg: &Arc<Algebra>,
        src_mult: &[usize],
        tgt_mult: &[usize],
        map: &ModuleMap,
    ) -> ProjMorphism {
        let ss = summands(src_mult);
        let ts = summands(tgt_mult);
        let mut out = ProjMorphism::zero(alg, src_mult.to_vec(), tgt_mult.to_vec());
        for (i, &u) in ss.iter().enumerate() {
            // the generator e_u of summand i sits at vertex u; find its row
            let bucket_u = alg.hom_paths(u, u);
            let trivial_pos = bucket_u
                .iter()
                .position(|&b| alg.basis[b].is_trivial())
                .expect("trivial path missing from its own bucket");
            let mut row_offset = 0;
            for (k, &uv) in ss.iter().enumerate() {
                if k == i {
                    break;
                }
                row_offset += alg.hom_paths(u, uv).len();
            }
            let row = row_offset + trivial_pos;
            // its image at vertex u, split over target summands
            let mut c0 = 0;
            for (j, &v) in ts.iter().enumerate() {
                let bucket_v = alg.hom_paths(u, v);
                let coords: Vec<Scalar> =
                    (0..bucket_v.len()).map(|c| map.mats[u].get(row, c0 + c).clone()).collect();
                out.entries[i][j] = alg.element_from_coords(bucket_v, &coords);
                c0 += bucket_v.len();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
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

    fn morphism(alg: &Arc<Algebra>, src: Vec<usize>, tgt: Vec<usize>, names: &[&str]) -> ProjMorphism {
        let mut m = ProjMorphism::zero(alg, src, tgt);
        let e = alg.path_from_names(names).unwrap();
        m.set_entry(0, 0, e);
        m
    }

    #[test]
    fn identity_applies_to_identity_matrix() {
        let alg = a2();
        let id = ProjMorphism::identity(&alg, vec![1, 0]);
        assert_eq!(id.apply(), Mat::identity(Field::Rationals, 2));
        assert!(!id.radical_membership());
    }

    #[test]
    fn relation_entry_applies_to_zero() {
        let alg = a2();
        let mut m = ProjMorphism::zero(&alg, vec![1, 0], vec![1, 0]);
        let e = alg.path_from_names(&["alpha", "beta"]).unwrap();
        m.set_entry(0, 0, e);
        assert!(m.apply().is_zero());
    }

    #[test]
    fn p_beta_alpha_has_rank_one() {
        let alg = a2();
        let m = morphism(&alg, vec![0, 1], vec![0, 1], &["beta", "alpha"]);
        assert!(m.radical_membership());
        assert_eq!(m.apply().rank(), 1);
    }

    #[test]
    fn apply_is_multiplicative() {
        let alg = a2();
        let a = morphism(&alg, vec![1, 0], vec![0, 1], &["alpha"]);
        let b = morphism(&alg, vec![0, 1], vec![0, 1], &["beta", "alpha"]);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(), a.apply().mul(&b.apply()));
        assert!(ab.apply().is_zero()); // alpha * beta*alpha contains the dead loop at 1
    }

    #[test]
    fn module_map_round_trip() {
        let alg = a2();
        let m = morphism(&alg, vec![0, 1], vec![1, 0], &["beta"]);
        let mm = m.to_module_map();
        let back = ProjMorphism::from_module_map(&alg, &m.src, &m.tgt, &mm);
        assert_eq!(back.entries[0][0], m.entries[0][0]);
    }
}
