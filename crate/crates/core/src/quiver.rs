//! Quivers, paths and formal linear combinations of paths.
//!
//! Paths are written in diagrammatic order: the product `w * v` is "first
//! traverse `w`, then `v`", and is zero unless the target of `w` is the
//! source of `v`. All relation lists in the algebra catalog are composable
//! exactly under this reading, which is the convention self-test in
//! `catalog`.

use crate::scalar::{Field, Scalar};
use std::collections::BTreeMap;
use std::fmt;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: VertexId,
    pub tgt: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self, String> {
        let mut q = Quiver { vertices, arrows: Vec::new() };
        let mut seen = std::collections::HashSet::new();
        for v in &q.vertices {
            if !seen.insert(v.clone()) {
                return Err(format!("duplicate vertex name {v:?}"));
            }
        }
        for (name, src, tgt) in arrows {
            if seen.contains(&name) {
                return Err(format!("arrow name {name:?} clashes"));
            }
            if q.arrows.iter().any(|a| a.name == name) {
                return Err(format!("duplicate arrow name {name:?}"));
            }
            let s = q.vertex_id(&src).ok_or_else(|| format!("unknown vertex {src:?}"))?;
            let t = q.vertex_id(&tgt).ok_or_else(|| format!("unknown vertex {tgt:?}"))?;
            q.arrows.push(Arrow { name, src: s, tgt: t });
        }
        Ok(q)
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows_from(&self, v: VertexId) -> impl Iterator<Item = (ArrowId, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.src == v)
    }
}

/// A composable arrow sequence; the empty sequence is the trivial path `e_v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path {
    pub src: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { src: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        Path { src: q.arrows[a].src, arrows: vec![a] }
    }

    pub fn from_arrow_names(q: &Quiver, names: &[&str]) -> Result<Self, String> {
        let mut ids = Vec::new();
        for n in names {
            ids.push(q.arrow_id(n).ok_or_else(|| format!("unknown arrow {n:?}"))?);
        }
        if ids.is_empty() {
            return Err("empty path needs a vertex; use Path::trivial".into());
        }
        let p = Path { src: q.arrows[ids[0]].src, arrows: ids };
        p.validate(q)?;
        Ok(p)
    }

    pub fn validate(&self, q: &Quiver) -> Result<(), String> {
        let mut at = self.src;
        for &a in &self.arrows {
            let arr = &q.arrows[a];
            if arr.src != at {
                return Err(format!("path not composable at arrow {:?}", arr.name));
            }
            at = arr.tgt;
        }
        Ok(())
    }

    pub fn tgt(&self, q: &Quiver) -> VertexId {
        self.arrows.last().map_or(self.src, |&a| q.arrows[a].tgt)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` then `other`; `None` when not composable.
    pub fn compose(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if self.tgt(q) != other.src {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { src: self.src, arrows })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", q.vertices[self.src])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect::<Vec<_>>().join("")
        }
    }
}

/// Length-lex key used to order paths: shorter first, then by source and
/// arrow sequence.
pub fn path_key(p: &Path) -> (usize, VertexId, Vec<ArrowId>) {
    (p.len(), p.src, p.arrows.clone())
}

/// A formal linear combination of paths over the session field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    pub field: Field,
    pub terms: BTreeMap<Path, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: Field) -> Self {
        AlgebraElement { field, terms: BTreeMap::new() }
    }

    pub fn from_path(field: Field, p: Path) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, Scalar::one(field));
        AlgebraElement { field, terms }
    }

    pub fn from_terms(field: Field, terms: Vec<(Scalar, Path)>) -> Self {
        let mut e = AlgebraElement::zero(field);
        for (c, p) in terms {
            e.add_term(&c, p);
        }
        e
    }

    pub fn add_term(&mut self, c: &Scalar, p: Path) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(|| Scalar::zero(self.field));
        *entry = entry.add(c);
        if entry.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(c, p.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.field);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    /// Formal product in the path algebra; non-composable pairs vanish.
    pub fn mul_formal(&self, q: &Quiver, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (p, c) in &self.terms {
            for (r, d) in &other.terms {
                if let Some(pr) = p.compose(q, r) {
                    out.add_term(&c.mul(d), pr);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the trivial path at `v`.
    pub fn trivial_coefficient(&self, v: VertexId) -> Scalar {
        self.terms.get(&Path::trivial(v)).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn has_trivial_component(&self) -> bool {
        self.terms.keys().any(|p| p.is_trivial())
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (p, c) in &self.terms {
            if c.is_one() {
                parts.push(p.display(q));
            } else {
                parts.push(format!("{}*{}", c, p.display(q)));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<element with {} terms>", self.terms.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_quiver() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                ("alpha".into(), "1".into(), "2".into()),
                ("beta".into(), "2".into(), "1".into()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn compose_respects_endpoints() {
        let q = a2_quiver();
        let alpha = Path::arrow(&q, 0);
        let beta = Path::arrow(&q, 1);
        let ab = alpha.compose(&q, &beta).unwrap();
        assert_eq!(ab.src, 0);
        assert_eq!(ab.tgt(&q), 0);
        assert!(alpha.compose(&q, &alpha).is_none());
    }

    #[test]
    fn trivial_path_is_unit() {
        let q = a2_quiver();
        let f = Field::Rationals;
        let e1 = AlgebraElement::from_path(f, Path::trivial(0));
        let alpha = AlgebraElement::from_path(f, Path::arrow(&q, 0));
        assert_eq!(e1.mul_formal(&q, &alpha), alpha);
        assert!(alpha.mul_formal(&q, &e1).is_zero());
    }

    #[test]
    fn cancellation() {
        let q = a2_quiver();
        let f = Field::Rationals;
        let alpha = AlgebraElement::from_path(f, Path::arrow(&q, 0));
        assert!(alpha.sub(&alpha).is_zero());
    }
}
