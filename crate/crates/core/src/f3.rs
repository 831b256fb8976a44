//! String and band representations of the bunch of semi-chains attached to
//! `F_3`, the projective-complex constructor, the set of strings whose
//! complexes need an extra truncated representative, and the enumerator for
//! the bounded derived category.
//!
//! Spaces live on the gluing classes `{r[i], x[i+2]}`, `{q[i-1], z[i]}`,
//! `y[i]-`, `y[i]+`, `p[i]-`, `p[i]+`. A word contributes one slot per
//! position, except that a `~` link between glued singleton classes shares
//! one slot between its two positions, while a `~` link inside a two-element
//! class allocates the minus and plus slots of the pair. Each `-` link
//! writes an identity block between the slots of its endpoints; a `-` link
//! next to a pair junction is additionally copied onto the other member of
//! the pair (for `p`-junctions the right-hand link is copied onto the first
//! member, for `y`-junctions the left-hand link onto the second member).
//! Bands cut the cycle at its closing `-` link, which carries the companion
//! matrix of the band polynomial; all slots then carry the polynomial's
//! degree as a block size. The construction is not taken on faith: the
//! verification sweeps require every realized object to be indecomposable
//! and the objects pairwise non-isomorphic.

use crate::algebra::Algebra;
use crate::catalog::{self, CatalogName};
use crate::complex::ProjComplex;
use crate::mat::Mat;
use crate::proj::ProjMorphism;
use crate::quiver::AlgebraElement;
use crate::scalar::{Field, Scalar};
use crate::semichain::{
    canonical_string_word, enumerate_cycle_words, enumerate_strings, CWord, Link, StringSpec, Sym,
    SymKind,
};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum F3Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("unsupported spec: {0}")]
    UnsupportedSpec(String),
    #[error("invalid band parameter: {0}")]
    BandParameter(String),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
}

/// A gluing class of the bunch (the vertex set of the associated problem).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassId {
    /// `{x[i], r[i-2]}`
    X(i64),
    /// `{z[i], q[i-1]}`
    Z(i64),
    Ym(i64),
    Yp(i64),
    Pm(i64),
    Pp(i64),
}

/// An element of the bunch, i.e. a point of one semi-chain.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Elt {
    X(i64),
    Z(i64),
    R(i64),
    Q(i64),
    Ym(i64),
    Yp(i64),
    Pm(i64),
    Pp(i64),
}

impl Elt {
    pub fn class(self) -> ClassId {
        match self {
            Elt::X(i) => ClassId::X(i),
            Elt::R(i) => ClassId::X(i + 2),
            Elt::Z(i) => ClassId::Z(i),
            Elt::Q(i) => ClassId::Z(i + 1),
            Elt::Ym(i) => ClassId::Ym(i),
            Elt::Yp(i) => ClassId::Yp(i),
            Elt::Pm(i) => ClassId::Pm(i),
            Elt::Pp(i) => ClassId::Pp(i),
        }
    }

    pub fn is_e_side(self) -> bool {
        matches!(self, Elt::X(_) | Elt::Z(_) | Elt::Ym(_) | Elt::Yp(_))
    }

    pub fn index(self) -> i64 {
        match self {
            Elt::X(i)
            | Elt::Z(i)
            | Elt::R(i)
            | Elt::Q(i)
            | Elt::Ym(i)
            | Elt::Yp(i)
            | Elt::Pm(i)
            | Elt::Pp(i) => i,
        }
    }
}

/// Representation data: a dimension per class and a matrix per pair of
/// elements on opposite semi-chains at one index. Matrices are stored in
/// the row convention `dim(class of u) x dim(class of v)`.
#[derive(Clone, Debug, Default)]
pub struct BunchRep {
    pub dims: BTreeMap<ClassId, usize>,
    pub mats: BTreeMap<(Elt, Elt), Mat>,
}

impl BunchRep {
    pub fn dim(&self, c: ClassId) -> usize {
        self.dims.get(&c).copied().unwrap_or(0)
    }

    pub fn mat(&self, field: Field, u: Elt, v: Elt) -> Mat {
        debug_assert!(u.is_e_side() && !v.is_e_side() && u.index() == v.index());
        self.mats
            .get(&(u, v))
            .cloned()
            .unwrap_or_else(|| Mat::zero(field, self.dim(u.class()), self.dim(v.class())))
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

/// A band: an aperiodic cycle with a polynomial parameter. The polynomial
/// is monic with nonzero constant term (so the companion matrix is
/// invertible), stored by ascending coefficients without the leading 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BandSpec {
    pub word: CWord,
    /// Coefficients `c_0, ..., c_{deg-1}` of a monic polynomial.
    pub poly: Vec<Scalar>,
    pub mult: usize,
}

impl BandSpec {
    pub fn eigenvalue(field: Field, word: CWord, lambda: i64, mult: usize) -> Result<Self, F3Error> {
        if lambda == 0 {
            return Err(F3Error::BandParameter("the polynomial x is excluded".into()));
        }
        Ok(BandSpec { word, poly: vec![Scalar::from_i64(field, -lambda)], mult })
    }

    pub fn degree(&self) -> usize {
        self.poly.len() * self.mult
    }
}

impl std::fmt::Display for BandSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coeffs: Vec<String> = self.poly.iter().map(|c| c.to_string()).collect();
        write!(f, "({}, f=[{}]+x^{}, m={})", self.word, coeffs.join(","), self.poly.len(), self.mult)
    }
}

/// Companion matrix of `f^mult` acting on `k[x]/(f^mult)`, row convention.
pub fn companion_of_power(field: Field, poly: &[Scalar], mult: usize) -> Result<Mat, F3Error> {
    if poly.is_empty() {
        return Err(F3Error::BandParameter("constant polynomial".into()));
    }
    if poly[0].is_zero() {
        return Err(F3Error::BandParameter("the polynomial x (zero constant term) is excluded".into()));
    }
    // full coefficient vector of f, ascending, with leading 1
    let mut f: Vec<Scalar> = poly.to_vec();
    f.push(Scalar::one(field));
    let mut power = vec![Scalar::one(field)];
    for _ in 0..mult {
        let mut next = vec![Scalar::zero(field); power.len() + f.len() - 1];
        for (i, a) in power.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] = next[i + j].add(&a.mul(b));
            }
        }
        power = next;
    }
    let d = power.len() - 1;
    let mut c = Mat::zero(field, d, d);
    for j in 0..d.saturating_sub(1) {
        c.set(j, j + 1, Scalar::one(field));
    }
    for j in 0..d {
        c.set(d - 1, j, power[j].neg());
    }
    Ok(c)
}

fn sym_to_elt(s: Sym, sign_plus: Option<bool>) -> Elt {
    match (s.kind, sign_plus) {
        (SymKind::X, _) => Elt::X(s.index),
        (SymKind::Z, _) => Elt::Z(s.index),
        (SymKind::R, _) => Elt::R(s.index),
        (SymKind::Q, _) => Elt::Q(s.index),
        (SymKind::Y, Some(false)) => Elt::Ym(s.index),
        (SymKind::Y, Some(true)) => Elt::Yp(s.index),
        (SymKind::P, Some(false)) => Elt::Pm(s.index),
        (SymKind::P, Some(true)) => Elt::Pp(s.index),
        _ => panic!("pair symbol without a sign"),
    }
}

struct WalkData {
    /// element role of each position
    roles: Vec<Elt>,
    /// slot id of each position (slots shared across glued tilde links)
    slots: Vec<usize>,
    n_slots: usize,
    /// dash links as (left position, right position, is_closing)
    dashes: Vec<(usize, usize, bool)>,
    /// pair junctions as (first member, second member)
    junctions: Vec<(usize, usize)>,
}

/// Lays out roles, slots and links for a word; `cyclic` drops the repeated
/// final symbol and records the closing dash.
fn walk(word: &CWord, cyclic: bool, k_flag: u8, l_flag: u8) -> Result<WalkData, F3Error> {
    word.validate().map_err(F3Error::InvalidWord)?;
    let (n, links): (usize, Vec<Link>) = if cyclic {
        (word.syms.len() - 1, word.links.clone())
    } else {
        (word.syms.len(), word.links.clone())
    };
    let syms: Vec<Sym> = word.syms[..n].to_vec();
    let link_at = |k: usize| -> Option<Link> { links.get(k).copied() };

    // pair junctions: tilde links between two pair symbols
    let mut junctions = Vec::new();
    let mut junction_member = vec![None::<(usize, bool)>; n]; // (junction id, is_second)
    for k in 0..links.len() {
        if links[k] == Link::Tilde && syms[k % n].kind.is_pair() {
            let a = k % n;
            let b = (k + 1) % n;
            junction_member[a] = Some((junctions.len(), false));
            junction_member[b] = Some((junctions.len(), true));
            junctions.push((a, b));
        }
    }

    // roles
    let mut roles = Vec::with_capacity(n);
    for (pos, s) in syms.iter().enumerate() {
        let role = if s.kind.is_pair() {
            match junction_member[pos] {
                Some((_, second)) => sym_to_elt(*s, Some(second)), // first gets minus
                None => {
                    // a free end: flag picks the element
                    let flag = if pos == 0 { k_flag } else { l_flag };
                    sym_to_elt(*s, Some(flag == 1))
                }
            }
        } else {
            sym_to_elt(*s, None)
        };
        roles.push(role);
    }

    // slots: union positions joined by singleton tilde links
    let mut slot_of: Vec<usize> = (0..n).collect();
    for k in 0..links.len() {
        if links[k] == Link::Tilde && !syms[k % n].kind.is_pair() {
            let a = k % n;
            let b = (k + 1) % n;
            let (ra, rb) = (slot_of[a], slot_of[b]);
            let keep = ra.min(rb);
            for s in slot_of.iter_mut() {
                if *s == ra || *s == rb {
                    *s = keep;
                }
            }
        }
    }
    // compress slot ids
    let mut remap = BTreeMap::new();
    for s in &slot_of {
        let next = remap.len();
        remap.entry(*s).or_insert(next);
    }
    let slots: Vec<usize> = slot_of.iter().map(|s| remap[s]).collect();
    let n_slots = remap.len();

    // dash links
    let mut dashes = Vec::new();
    for k in 0..links.len() {
        if links[k] == Link::Dash {
            let a = k % n;
            let b = (k + 1) % n;
            let closing = cyclic && k == links.len() - 1;
            dashes.push((a, b, closing));
        }
    }
    let _ = link_at;
    Ok(WalkData { roles, slots, n_slots, dashes, junctions })
}

/// Builds the representation of a string or band.
pub struct RealizeOptions {
    pub field: Field,
    /// Bispecial strings are realized only when enabled; their construction
    /// semantics are a documented extrapolation validated by the oracle.
    pub bispecial: bool,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions { field: Field::Rationals, bispecial: false }
    }
}

pub fn realize_string(spec: &StringSpec, opts: &RealizeOptions) -> Result<BunchRep, F3Error> {
    let (word, k, l) = match spec {
        StringSpec::Usual { word } => (word.clone(), 0, 0),
        StringSpec::Special { word, k } => {
            // the flag belongs to whichever end is free
            if word.d_l() == 1 {
                (word.clone(), *k, 0)
            } else {
                (word.clone(), 0, *k)
            }
        }
        StringSpec::Bispecial { word, k, l, n } => {
            if !opts.bispecial {
                return Err(F3Error::UnsupportedSpec(
                    "bispecial strings are gated off by default; enable `bispecial` to realize them"
                        .into(),
                ));
            }
            (crate::semichain::build_wind(word, *n), *k, *l)
        }
    };
    let data = walk(&word, false, k, l)?;
    Ok(assemble(&data, &word, false, opts.field, None))
}

pub fn realize_band(spec: &BandSpec, opts: &RealizeOptions) -> Result<BunchRep, F3Error> {
    if !spec.word.is_cycle() {
        return Err(F3Error::InvalidWord("band word is not a cycle".into()));
    }
    if !spec.word.is_aperiodic() {
        return Err(F3Error::InvalidWord("band cycle must be aperiodic".into()));
    }
    let phi = companion_of_power(opts.field, &spec.poly, spec.mult)?;
    let data = walk(&spec.word, true, 0, 0)?;
    Ok(assemble(&data, &spec.word, true, opts.field, Some(&phi)))
}

fn assemble(data: &WalkData, word: &CWord, cyclic: bool, field: Field, phi: Option<&Mat>) -> BunchRep {
    let block = phi.map_or(1, |m| m.rows());
    let n = data.roles.len();
    let _ = word;
    // slot offsets within each class
    let mut dims: BTreeMap<ClassId, usize> = BTreeMap::new();
    let mut slot_offset: Vec<Option<usize>> = vec![None; data.n_slots];
    let mut class_of_slot: Vec<Option<ClassId>> = vec![None; data.n_slots];
    for pos in 0..n {
        let slot = data.slots[pos];
        if slot_offset[slot].is_none() {
            let c = data.roles[pos].class();
            let d = dims.entry(c).or_insert(0);
            slot_offset[slot] = Some(*d);
            class_of_slot[slot] = Some(c);
            *d += block;
        } else {
            debug_assert_eq!(class_of_slot[slot], Some(data.roles[pos].class()));
        }
    }

    let mut rep = BunchRep { dims, mats: BTreeMap::new() };

    // an entry ties (E-side position, F-side position) with a coefficient
    let mut add_entry = |rep: &mut BunchRep, e_pos: usize, f_pos: usize, coef: &Mat| {
        let (eu, fv) = (data.roles[e_pos], data.roles[f_pos]);
        debug_assert!(eu.is_e_side() && !fv.is_e_side());
        let (cu, cv) = (eu.class(), fv.class());
        let (du, dv) = (rep.dim(cu), rep.dim(cv));
        let key = (eu, fv);
        let m = rep.mats.entry(key).or_insert_with(|| Mat::zero(field, du, dv));
        let r0 = slot_offset[data.slots[e_pos]].unwrap();
        let c0 = slot_offset[data.slots[f_pos]].unwrap();
        let mut updated = m.clone();
        for i in 0..block {
            for j in 0..block {
                let cur = updated.get(r0 + i, c0 + j).add(coef.get(i, j));
                updated.set(r0 + i, c0 + j, cur);
            }
        }
        *m = updated;
    };

    let ident = Mat::identity(field, block);
    let coef_of = |closing: bool| -> &Mat {
        if closing {
            phi.expect("closing link only occurs for bands")
        } else {
            &ident
        }
    };

    // direct entries
    for &(a, b, closing) in &data.dashes {
        let (e_pos, f_pos) = if data.roles[a].is_e_side() { (a, b) } else { (b, a) };
        add_entry(&mut rep, e_pos, f_pos, coef_of(closing));
    }

    // junction copies: for a p-junction the outside link of the second
    // member is copied onto the first; for a y-junction the outside link of
    // the first member is copied onto the second. End junctions fall back to
    // the member that actually carries a dash link.
    let dash_of = |pos: usize| -> Option<(usize, usize, bool)> {
        data.dashes.iter().find(|&&(a, b, _)| a == pos || b == pos).copied()
    };
    for &(first, second) in &data.junctions {
        let is_p = matches!(data.roles[first], Elt::Pm(_) | Elt::Pp(_));
        let (mut source_member, mut target_member) =
            if is_p { (second, first) } else { (first, second) };
        if dash_of(source_member).is_none() {
            std::mem::swap(&mut source_member, &mut target_member);
        }
        let Some((a, b, closing)) = dash_of(source_member) else { continue };
        let other = if a == source_member { b } else { a };
        let coef = coef_of(closing);
        if data.roles[target_member].is_e_side() {
            add_entry(&mut rep, target_member, other, coef);
        } else {
            add_entry(&mut rep, other, target_member, coef);
        }
        let _ = cyclic;
    }

    rep
}

/// Part layout of the three multiplicity blocks of a degree, as forced by
/// the identity blocks of the complex constructor.
fn parts1(i: i64) -> [ClassId; 3] {
    [ClassId::X(i), ClassId::Pm(i - 2), ClassId::Yp(i)]
}

fn parts2(i: i64) -> [ClassId; 4] {
    [ClassId::X(i + 1), ClassId::Pm(i - 1), ClassId::Pp(i - 1), ClassId::Z(i)]
}

fn parts3(i: i64) -> [ClassId; 3] {
    [ClassId::X(i), ClassId::Pp(i - 2), ClassId::Ym(i)]
}

/// The four column elements of the `F`-side at index `i`, matching the
/// column order of `parts2(i + 1)`.
fn f_columns(i: i64) -> [Elt; 4] {
    [Elt::R(i), Elt::Pm(i), Elt::Pp(i), Elt::Q(i)]
}

/// Builds the projective complex of a bunch representation over `F_3`.
pub fn build_complex(rep: &BunchRep, alg: &Arc<Algebra>) -> ProjComplex {
    let field = alg.field;
    if rep.is_zero() {
        return ProjComplex::zero(alg);
    }
    // degree range touched by the classes
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (&c, &d) in &rep.dims {
        if d == 0 {
            continue;
        }
        let degrees: &[i64] = match c {
            ClassId::X(j) => &[j - 1, j],
            ClassId::Z(j) => &[j],
            ClassId::Pm(j) => &[j + 1, j + 2],
            ClassId::Pp(j) => &[j + 1, j + 2],
            ClassId::Ym(j) | ClassId::Yp(j) => &[j],
        };
        for &d in degrees {
            lo = lo.min(d);
            hi = hi.max(d);
        }
    }
    let d1 = |i: i64| parts1(i).iter().map(|&c| rep.dim(c)).sum::<usize>();
    let d2 = |i: i64| parts2(i).iter().map(|&c| rep.dim(c)).sum::<usize>();
    let d3 = |i: i64| parts3(i).iter().map(|&c| rep.dim(c)).sum::<usize>();

    let mut terms: Vec<Vec<usize>> = Vec::new();
    for i in lo..=hi {
        terms.push(vec![d1(i), d2(i), d3(i)]);
    }

    // offsets of the parts inside each vertex block
    let offsets = |sizes: &[usize]| -> Vec<usize> {
        let mut out = vec![0usize];
        for &s in sizes {
            out.push(out.last().unwrap() + s);
        }
        out
    };

    let path = |names: &[&str]| alg.path_from_names(names).unwrap();
    let alpha1 = path(&["alpha1"]);
    let beta1 = path(&["beta1"]);
    let loop2 = path(&["beta1", "alpha1"]);
    let alpha2 = path(&["alpha2"]);
    let beta2 = path(&["beta2"]);

    let mut diffs = Vec::new();
    for i in lo..hi {
        let src = terms[(i - lo) as usize].clone();
        let tgt = terms[(i - lo + 1) as usize].clone();
        let mut m = ProjMorphism::zero(alg, src.clone(), tgt.clone());
        // row offsets: vertex blocks in order P1, P2, P3
        let row_base = [0, src[0], src[0] + src[1]];
        let col_base = [0, tgt[0], tgt[0] + tgt[1]];
        let p1_rows: Vec<usize> = parts1(i).iter().map(|&c| rep.dim(c)).collect();
        let p2_rows: Vec<usize> = parts2(i).iter().map(|&c| rep.dim(c)).collect();
        let p3_rows: Vec<usize> = parts3(i).iter().map(|&c| rep.dim(c)).collect();
        let p1_cols: Vec<usize> = parts1(i + 1).iter().map(|&c| rep.dim(c)).collect();
        let p2_cols: Vec<usize> = parts2(i + 1).iter().map(|&c| rep.dim(c)).collect();
        let p3_cols: Vec<usize> = parts3(i + 1).iter().map(|&c| rep.dim(c)).collect();
        let ro1 = offsets(&p1_rows);
        let ro2 = offsets(&p2_rows);
        let ro3 = offsets(&p3_rows);
        let co1 = offsets(&p1_cols);
        let co2 = offsets(&p2_cols);
        let co3 = offsets(&p3_cols);

        let mut put = |m: &mut ProjMorphism,
                       row0: usize,
                       col0: usize,
                       mat: &Mat,
                       word: &AlgebraElement,
                       negate: bool| {
            for r in 0..mat.rows() {
                for c in 0..mat.cols() {
                    let coef = if negate { mat.get(r, c).neg() } else { mat.get(r, c).clone() };
                    if coef.is_zero() {
                        continue;
                    }
                    let e = word.scale(&coef);
                    m.entries[row0 + r][col0 + c] = m.entries[row0 + r][col0 + c].add(&e);
                }
            }
        };

        // A_i: P1(i) -> P2(i+1); rows (x, -, y+), columns f_columns(i)
        for (ci, v) in f_columns(i).into_iter().enumerate() {
            let a_x = rep.mat(field, Elt::X(i), v);
            put(&mut m, row_base[0] + ro1[0], col_base[1] + co2[ci], &a_x, &alpha1, false);
            let a_y = rep.mat(field, Elt::Yp(i), v);
            put(&mut m, row_base[0] + ro1[2], col_base[1] + co2[ci], &a_y, &alpha1, false);
        }
        // B_i: P2(i) -> P1(i+1); identities on parts 1 and 2
        let e1 = Mat::identity(field, rep.dim(ClassId::X(i + 1)));
        put(&mut m, row_base[1] + ro2[0], col_base[0] + co1[0], &e1, &beta1, false);
        let e2 = Mat::identity(field, rep.dim(ClassId::Pm(i - 1)));
        put(&mut m, row_base[1] + ro2[1], col_base[0] + co1[1], &e2, &beta1, false);
        // C_i: P2(i) -> P2(i+1); only the z-row
        for (ci, v) in f_columns(i).into_iter().enumerate() {
            let c_z = rep.mat(field, Elt::Z(i), v);
            put(&mut m, row_base[1] + ro2[3], col_base[1] + co2[ci], &c_z, &loop2, false);
        }
        // D_i: P2(i) -> P3(i+1); identities on parts 1 and 3
        put(&mut m, row_base[1] + ro2[0], col_base[2] + co3[0], &e1, &alpha2, false);
        let e3 = Mat::identity(field, rep.dim(ClassId::Pp(i - 1)));
        put(&mut m, row_base[1] + ro2[2], col_base[2] + co3[1], &e3, &alpha2, false);
        // R_i: P3(i) -> P2(i+1); x-row negated, y- row plain
        for (ci, v) in f_columns(i).into_iter().enumerate() {
            let r_x = rep.mat(field, Elt::X(i), v);
            put(&mut m, row_base[2] + ro3[0], col_base[1] + co2[ci], &r_x, &beta2, true);
            let r_y = rep.mat(field, Elt::Ym(i), v);
            put(&mut m, row_base[2] + ro3[2], col_base[1] + co2[ci], &r_y, &beta2, false);
        }
        diffs.push(m);
    }
    ProjComplex::from_terms(alg, lo, terms, diffs).trimmed()
}

/// Convenience: realize a string and build its complex over `F_3`.
pub fn string_complex(spec: &StringSpec, opts: &RealizeOptions) -> Result<ProjComplex, F3Error> {
    let rep = realize_string(spec, opts)?;
    let alg = f3_algebra(opts.field)?;
    Ok(build_complex(&rep, &alg))
}

pub fn band_complex(spec: &BandSpec, opts: &RealizeOptions) -> Result<ProjComplex, F3Error> {
    let rep = realize_band(spec, opts)?;
    let alg = f3_algebra(opts.field)?;
    Ok(build_complex(&rep, &alg))
}

pub fn f3_algebra(field: Field) -> Result<Arc<Algebra>, F3Error> {
    Ok(catalog::get_over(CatalogName::F(3), field)?.algebra)
}

/// The table of index offsets in the membership conditions: each symbol is
/// matched against the list `x[i+1], y[i], z[i], r[i-1], p[i], q[i-1]` and
/// the resulting `i` must be at least the threshold.
fn psi_index(sym: Sym) -> i64 {
    match sym.kind {
        SymKind::X => sym.index - 1,
        SymKind::Y => sym.index,
        SymKind::Z => sym.index,
        SymKind::R => sym.index + 1,
        SymKind::P => sym.index,
        SymKind::Q => sym.index + 1,
    }
}

fn psi_index_condition(word: &CWord, t: i64) -> bool {
    word.syms.iter().all(|&s| psi_index(s) >= t)
}

/// Membership in the set of strings whose complexes acquire an extra
/// truncated representative. Usual and special strings only (the definition
/// does not include bispecial strings). Clauses (a) and (b) require the word
/// to continue past the `q ~ z` start: the bare two-symbol word realizes a
/// stalk complex whose bottom kernel is projective.
pub fn in_psi(spec: &StringSpec) -> bool {
    let word = match spec {
        StringSpec::Usual { word } => word,
        StringSpec::Special { word, .. } => word,
        StringSpec::Bispecial { .. } => return false,
    };
    let m = word.links.len();
    let syms = &word.syms;
    // (a) w0 = q[t-1], r1 = ~, w1 = z[t]
    if m >= 2 && syms[0].kind == SymKind::Q && word.links[0] == Link::Tilde {
        let t = syms[0].index + 1;
        if psi_index_condition(word, t) {
            return true;
        }
    }
    // (b) mirror at the right end
    if m >= 2 && syms[m].kind == SymKind::Q && word.links[m - 1] == Link::Tilde {
        let t = syms[m].index + 1;
        if psi_index_condition(word, t) {
            return true;
        }
    }
    // (c) w0 = r[t-1], r1 = ~, w1 = x[t+1], w2 != r[t+1]
    if m >= 1 && syms[0].kind == SymKind::R && word.links[0] == Link::Tilde {
        let t = syms[0].index + 1;
        let w2_ok = syms.get(2).is_none_or(|w2| *w2 != Sym::new(SymKind::R, t + 1));
        if w2_ok && psi_index_condition(word, t) {
            return true;
        }
    }
    // (d) mirror
    if m >= 1 && syms[m].kind == SymKind::R && word.links[m - 1] == Link::Tilde {
        let t = syms[m].index + 1;
        let w2_ok = (m as i64 - 2 >= 0)
            .then(|| syms[m - 2] != Sym::new(SymKind::R, t + 1))
            .unwrap_or(true);
        if w2_ok && psi_index_condition(word, t) {
            return true;
        }
    }
    false
}

/// One object of the derived-category list.
#[derive(Clone, Debug)]
pub enum Origin {
    String(StringSpec),
    Band(BandSpec),
}

impl std::fmt::Display for Origin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Origin::String(s) => write!(f, "string {s}"),
            Origin::Band(b) => write!(f, "band {b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DbObject {
    pub origin: Origin,
    pub complex: ProjComplex,
    /// Set when this entry stands for the good truncation of the complex.
    pub truncated: bool,
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub max_links: usize,
    /// Band eigenvalues (linear polynomials `x - lambda`).
    pub eigenvalues: Vec<i64>,
    pub band_mult_max: usize,
    pub bispecial: bool,
    pub bispecial_n_max: usize,
    /// Also emit the truncated companions of strings in the extra family.
    pub truncations: bool,
    pub field: Field,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_links: 4,
            eigenvalues: Vec::new(),
            band_mult_max: 1,
            bispecial: false,
            bispecial_n_max: 2,
            truncations: false,
            field: Field::Rationals,
        }
    }
}

/// Enumerates the objects of the bounded derived category of `F_3` within
/// the given bounds: one complex per string and band (up to reversal,
/// rotation and index translation), plus the truncated companion of each
/// string in the extra family when requested.
pub fn enumerate_db_f3(opts: &EnumerateOptions) -> Result<Vec<DbObject>, F3Error> {
    let ropts = RealizeOptions { field: opts.field, bispecial: opts.bispecial };
    let alg = f3_algebra(opts.field)?;
    let mut out = Vec::new();
    let strings = enumerate_strings(opts.max_links, opts.bispecial.then_some(opts.bispecial_n_max));
    let strings = crate::semichain::dedup_bispecial(strings);
    for s in strings {
        if s.is_bispecial() && !opts.bispecial {
            continue;
        }
        let rep = realize_string(&s, &ropts)?;
        let complex = build_complex(&rep, &alg);
        out.push(DbObject { origin: Origin::String(s.clone()), complex: complex.clone(), truncated: false });
        if opts.truncations && in_psi(&s) {
            out.push(DbObject { origin: Origin::String(s), complex, truncated: true });
        }
    }
    if !opts.eigenvalues.is_empty() {
        for word in enumerate_cycle_words(opts.max_links) {
            for &lambda in &opts.eigenvalues {
                for mult in 1..=opts.band_mult_max {
                    let spec = BandSpec::eigenvalue(opts.field, word.clone(), lambda, mult)?;
                    let rep = realize_band(&spec, &ropts)?;
                    let complex = build_complex(&rep, &alg);
                    out.push(DbObject { origin: Origin::Band(spec), complex, truncated: false });
                }
            }
        }
    }
    Ok(out)
}

/// A small window instance of the bunch, for validating the defining
/// conditions on concrete data.
pub struct BunchInstance {
    pub indices: Vec<i64>,
}

pub fn c_f3(lo: i64, hi: i64) -> BunchInstance {
    BunchInstance { indices: (lo..=hi).collect() }
}

impl BunchInstance {
    pub fn e_elements(&self, i: i64) -> Vec<Elt> {
        vec![Elt::Ym(i), Elt::Yp(i), Elt::X(i), Elt::Z(i)]
    }

    pub fn f_elements(&self, i: i64) -> Vec<Elt> {
        vec![Elt::R(i), Elt::Pm(i), Elt::Pp(i), Elt::Q(i)]
    }

    /// Strict order within one semi-chain.
    pub fn less(&self, a: Elt, b: Elt) -> bool {
        use Elt::*;
        match (a, b) {
            (Ym(i), X(j)) | (Yp(i), X(j)) | (Ym(i), Z(j)) | (Yp(i), Z(j)) | (X(i), Z(j)) => i == j,
            (R(i), Pm(j)) | (R(i), Pp(j)) | (R(i), Q(j)) | (Pm(i), Q(j)) | (Pp(i), Q(j)) => i == j,
            _ => false,
        }
    }

    pub fn comparable(&self, a: Elt, b: Elt) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    /// The two-element-or-less gluing classes and the comparability
    /// condition of the definition.
    pub fn validate(&self) -> Result<(), String> {
        for &i in &self.indices {
            // glued partners must be comparable with everything in their chain
            let glued = [
                (Elt::X(i), self.e_elements(i)),
                (Elt::Z(i), self.e_elements(i)),
                (Elt::R(i), self.f_elements(i)),
                (Elt::Q(i), self.f_elements(i)),
            ];
            for (a, chain) in glued {
                for b in chain {
                    if a != b && !self.comparable(a, b) {
                        return Err(format!("{a:?} glued but incomparable with {b:?}"));
                    }
                }
            }
            // the pairs are mutually incomparable, and nothing else is
            for side in [self.e_elements(i), self.f_elements(i)] {
                for &a in &side {
                    let incomp: Vec<Elt> =
                        side.iter().copied().filter(|&b| b != a && !self.comparable(a, b)).collect();
                    if incomp.len() > 1 {
                        return Err(format!("{a:?} incomparable with more than one element"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semichain::parse_word;

    fn opts() -> RealizeOptions {
        RealizeOptions::default()
    }

    fn usual(s: &str) -> StringSpec {
        StringSpec::Usual { word: parse_word(s).unwrap() }
    }

    fn special(s: &str, k: u8) -> StringSpec {
        StringSpec::Special { word: parse_word(s).unwrap(), k }
    }

    #[test]
    fn bunch_instance_satisfies_the_definition() {
        assert!(c_f3(0, 2).validate().is_ok());
    }

    #[test]
    fn special_string_p0_is_a_stalk() {
        let alg = f3_algebra(Field::Rationals).unwrap();
        let rep = realize_string(&special("p0", 0), &opts()).unwrap();
        let c = build_complex(&rep, &alg);
        // p[0] with the minus flag: P2 at degree 1 mapping to P1 at degree 2
        assert_eq!(c.graded_multiplicities().len(), 2);
        assert!(c.in_frak_p());
        let rep = realize_string(&special("p0", 1), &opts()).unwrap();
        let c = build_complex(&rep, &alg);
        assert!(c.in_frak_p());
        // plus flag: P2 then P3
        assert_eq!(c.term(2).unwrap(), &vec![0, 0, 1]);
    }

    #[test]
    fn spec_example_q0_z1_p1() {
        let alg = f3_algebra(Field::Rationals).unwrap();
        // (w, 0): P2 -> P2 -> P1 through the loop then beta1
        let c0 = build_complex(&realize_string(&special("q0~z1-p1", 0), &opts()).unwrap(), &alg);
        assert_eq!(c0.graded_multiplicities(), [(1, vec![0, 1, 0]), (2, vec![0, 1, 0]), (3, vec![1, 0, 0])].into_iter().collect());
        assert!(c0.in_frak_p());
        // (w, 1): ends in P3 instead
        let c1 = build_complex(&realize_string(&special("q0~z1-p1", 1), &opts()).unwrap(), &alg);
        assert_eq!(c1.term(3).unwrap(), &vec![0, 0, 1]);
        assert!(c1.in_frak_p());
    }

    #[test]
    fn r0_x2_realizes_psi_map() {
        let alg = f3_algebra(Field::Rationals).unwrap();
        let c = build_complex(&realize_string(&usual("r0~x2"), &opts()).unwrap(), &alg);
        // P2 at degree 1, P1 + P3 at degree 2
        assert_eq!(c.graded_multiplicities(), [(1, vec![0, 1, 0]), (2, vec![1, 0, 1])].into_iter().collect());
        assert!(c.in_frak_p());
    }

    #[test]
    fn band_complex_is_valid_and_depends_on_lambda() {
        let alg = f3_algebra(Field::Rationals).unwrap();
        let word = parse_word("p0~p0-y0~y0-p0").unwrap();
        let mut complexes = Vec::new();
        for lambda in [1i64, 2, 3] {
            let spec = BandSpec::eigenvalue(Field::Rationals, word.clone(), lambda, 1).unwrap();
            let c = band_complex(&spec, &opts()).unwrap();
            assert!(c.in_frak_p(), "lambda={lambda}");
            complexes.push(c);
        }
        // identical graded shapes
        assert_eq!(complexes[0].graded_multiplicities(), complexes[1].graded_multiplicities());
        // identical cohomology (one-parameter family)
        assert_eq!(complexes[0].cohomology(), complexes[1].cohomology());
    }

    #[test]
    fn psi_membership_examples() {
        assert!(in_psi(&special("q0~z1-p1", 0)));
        assert!(in_psi(&special("q0~z1-p1", 1)));
        assert!(in_psi(&usual("r0~x2")));
        // the bare q ~ z word realizes a stalk: not in the set
        assert!(!in_psi(&usual("q0~z1")));
        // clause (c) excludes the r-continuation
        assert!(!in_psi(&usual("r0~x2-r2~x4")));
        assert!(in_psi(&usual("r0~x2-q2~z3")));
        // the index condition: the descent to x[3] sits below the threshold
        // of the q[2] start, and no other clause applies
        let w = special("q2~z3-p3~p3-x3~r1-y1", 0);
        assert!(w.word().classify().valid);
        assert!(!in_psi(&w));
        // flags never matter for membership, and bispecial strings are out
        let b = StringSpec::Bispecial { word: parse_word("p0-y0").unwrap(), k: 0, l: 0, n: 1 };
        assert!(!in_psi(&b));
    }

    #[test]
    fn end_junction_words_stay_connected() {
        let alg = f3_algebra(Field::Rationals).unwrap();
        let rep = realize_string(&usual("q0~z1-p1~p1"), &opts()).unwrap();
        // one shared slot plus the two pair slots, all tied
        assert_eq!(rep.total_dim(), 3);
        let c = build_complex(&rep, &alg);
        assert!(c.in_frak_p());
        assert!(crate::homotopy::is_indecomposable(&c).unwrap());
    }

    #[test]
    fn enumeration_contains_truncation_companions() {
        let opts = EnumerateOptions { max_links: 2, truncations: true, ..Default::default() };
        let objects = enumerate_db_f3(&opts).unwrap();
        let truncated: Vec<&DbObject> = objects.iter().filter(|o| o.truncated).collect();
        assert!(!truncated.is_empty());
        // every truncated entry corresponds to a string in the extra family
        for t in truncated {
            match &t.origin {
                Origin::String(s) => assert!(in_psi(s)),
                _ => panic!("bands never truncate"),
            }
        }
    }
}
