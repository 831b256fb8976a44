//! The bunch of semi-chains attached to `F_3` and its word combinatorics:
//! C-words, cycles, fullness, simplicity, strings and bands.
//!
//! Symbols are the classes `x[i], y[i], z[i], r[i], p[i], q[i]` with
//! `y[i]` and `p[i]` the two-element classes. Per index `i` the semi-chains
//! are `E_i = { y[i]- < x[i] < z[i], y[i]+ < x[i] }` and
//! `F_i = { r[i] < p[i]- < q[i] > p[i]+ > r[i] }`, and the gluing relation
//! identifies `r[i] ~ x[i+2]` and `q[i] ~ z[i+1]`. A `-` link joins classes
//! of `E_i` and `F_i` at one index; a `~` link joins a class with its glued
//! partner (or a two-element class with itself). Links alternate.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SymKind {
    X,
    Y,
    Z,
    R,
    P,
    Q,
}

impl SymKind {
    pub fn is_e_side(self) -> bool {
        matches!(self, SymKind::X | SymKind::Y | SymKind::Z)
    }

    /// Two-element classes (an incomparable pair in their semi-chain).
    pub fn is_pair(self) -> bool {
        matches!(self, SymKind::Y | SymKind::P)
    }

    pub fn letter(self) -> char {
        match self {
            SymKind::X => 'x',
            SymKind::Y => 'y',
            SymKind::Z => 'z',
            SymKind::R => 'r',
            SymKind::P => 'p',
            SymKind::Q => 'q',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Sym {
    pub kind: SymKind,
    pub index: i64,
}

impl Sym {
    pub fn new(kind: SymKind, index: i64) -> Self {
        Sym { kind, index }
    }

    /// The partner under the gluing relation for singleton classes, or the
    /// class itself for the two-element classes.
    pub fn tilde_partner(self) -> Sym {
        match self.kind {
            SymKind::R => Sym::new(SymKind::X, self.index + 2),
            SymKind::X => Sym::new(SymKind::R, self.index - 2),
            SymKind::Q => Sym::new(SymKind::Z, self.index + 1),
            SymKind::Z => Sym::new(SymKind::Q, self.index - 1),
            SymKind::P | SymKind::Y => self,
        }
    }

    pub fn tilde_related(self, other: Sym) -> bool {
        if self.kind.is_pair() {
            self == other
        } else {
            self.tilde_partner() == other
        }
    }

    pub fn dash_related(self, other: Sym) -> bool {
        self.index == other.index && self.kind.is_e_side() != other.kind.is_e_side()
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind.letter(), self.index)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Link {
    Tilde,
    Dash,
}

impl Link {
    pub fn symbol(self) -> char {
        match self {
            Link::Tilde => '~',
            Link::Dash => '-',
        }
    }
}

/// A word `w_0 r_1 w_1 ... r_m w_m`; `syms.len() == links.len() + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CWord {
    pub syms: Vec<Sym>,
    pub links: Vec<Link>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordInfo {
    pub valid: bool,
    pub violation: Option<String>,
    pub full: bool,
    pub cycle: bool,
    pub aperiodic: bool,
    pub simple: bool,
    pub d_l: u8,
    pub d_r: u8,
}

impl CWord {
    pub fn single(sym: Sym) -> Self {
        CWord { syms: vec![sym], links: Vec::new() }
    }

    pub fn len_links(&self) -> usize {
        self.links.len()
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.syms.len() != self.links.len() + 1 {
            return Err("length mismatch between symbols and links".into());
        }
        for k in 0..self.links.len() {
            let (a, b) = (self.syms[k], self.syms[k + 1]);
            match self.links[k] {
                Link::Tilde => {
                    if !a.tilde_related(b) {
                        return Err(format!("clause (a): {a} ~ {b} does not hold"));
                    }
                }
                Link::Dash => {
                    if !a.dash_related(b) {
                        return Err(format!(
                            "clause (b): {a} - {b} needs opposite semi-chains at one index"
                        ));
                    }
                }
            }
            if k + 1 < self.links.len() && self.links[k] == self.links[k + 1] {
                return Err(format!("clause (c): equal consecutive links at position {}", k + 1));
            }
        }
        Ok(())
    }

    /// A full word pins down both roles of every singleton end symbol: an
    /// end at `x, z, r, q` must carry its `~` link. Pair classes may dangle.
    pub fn is_full(&self) -> bool {
        let first_ok = self.syms[0].kind.is_pair()
            || self.links.first().map(|&l| l == Link::Tilde).unwrap_or(false);
        let last_ok = self.syms[self.syms.len() - 1].kind.is_pair()
            || self.links.last().map(|&l| l == Link::Tilde).unwrap_or(false);
        first_ok && last_ok
    }

    pub fn is_cycle(&self) -> bool {
        !self.links.is_empty()
            && self.syms[0] == self.syms[self.syms.len() - 1]
            && self.links[0] == Link::Tilde
            && self.links[self.links.len() - 1] == Link::Dash
    }

    pub fn d_l(&self) -> u8 {
        let w0 = self.syms[0];
        let self_tilde = w0.kind.is_pair();
        let cond = self.links.is_empty() || self.links[0] == Link::Dash;
        u8::from(self_tilde && cond)
    }

    pub fn d_r(&self) -> u8 {
        let wm = self.syms[self.syms.len() - 1];
        let self_tilde = wm.kind.is_pair();
        let cond = !self.links.is_empty() && self.links[self.links.len() - 1] == Link::Dash;
        u8::from(self_tilde && cond)
    }

    /// Aperiodicity of a cycle: the sequence `w_0 r_1 w_1 ... r_m` is not a
    /// proper power.
    pub fn is_aperiodic(&self) -> bool {
        if !self.is_cycle() {
            return false;
        }
        let m = self.links.len();
        for period in 1..m {
            if m % period != 0 {
                continue;
            }
            let mut matches = true;
            for k in 0..m {
                if self.syms[k] != self.syms[k % period] || self.links[k] != self.links[k % period] {
                    matches = false;
                    break;
                }
            }
            if matches {
                return false;
            }
        }
        true
    }

    pub fn reverse(&self) -> CWord {
        let mut syms = self.syms.clone();
        syms.reverse();
        let mut links = self.links.clone();
        links.reverse();
        CWord { syms, links }
    }

    /// Simplicity: the word is not of the form `u ~ u* ~ u ~ ...` with at
    /// least two factors.
    pub fn is_simple(&self) -> bool {
        let n = self.syms.len();
        for a in 1..n {
            if n % a != 0 {
                continue;
            }
            let t = n / a;
            if t < 2 {
                continue;
            }
            let u = CWord { syms: self.syms[0..a].to_vec(), links: self.links[0..a - 1].to_vec() };
            if &build_wind(&u, t) == self {
                return false;
            }
        }
        true
    }

    /// Index translation.
    pub fn translate(&self, by: i64) -> CWord {
        CWord {
            syms: self.syms.iter().map(|s| Sym::new(s.kind, s.index + by)).collect(),
            links: self.links.clone(),
        }
    }

    /// Translated so the minimal symbol index is 0.
    pub fn normalized(&self) -> CWord {
        let min = self.syms.iter().map(|s| s.index).min().unwrap_or(0);
        self.translate(-min)
    }

    pub fn min_index(&self) -> i64 {
        self.syms.iter().map(|s| s.index).min().unwrap_or(0)
    }

    pub fn max_index(&self) -> i64 {
        self.syms.iter().map(|s| s.index).max().unwrap_or(0)
    }

    pub fn classify(&self) -> WordInfo {
        let (valid, violation) = match self.validate() {
            Ok(()) => (true, None),
            Err(e) => (false, Some(e)),
        };
        if !valid {
            return WordInfo {
                valid,
                violation,
                full: false,
                cycle: false,
                aperiodic: false,
                simple: false,
                d_l: 0,
                d_r: 0,
            };
        }
        WordInfo {
            valid,
            violation,
            full: self.is_full(),
            cycle: self.is_cycle(),
            aperiodic: self.is_aperiodic(),
            simple: self.is_simple(),
            d_l: self.d_l(),
            d_r: self.d_r(),
        }
    }
}

impl fmt::Display for CWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.syms.iter().enumerate() {
            if k > 0 {
                write!(f, "{}", self.links[k - 1].symbol())?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `u ~ u* ~ u ~ ...` with `t` factors (used by the simplicity test and the
/// bispecial construction).
pub fn build_wind(u: &CWord, t: usize) -> CWord {
    let mut syms = Vec::new();
    let mut links = Vec::new();
    let rev = u.reverse();
    for factor in 0..t {
        let w = if factor % 2 == 0 { u } else { &rev };
        if factor > 0 {
            links.push(Link::Tilde);
        }
        syms.extend(w.syms.iter().copied());
        links.extend(w.links.iter().copied());
    }
    CWord { syms, links }
}

/// Parses "q0~z1-p1" or "q[0]~z[1]-p[1]" (brackets required for negative
/// indices).
pub fn parse_word(s: &str) -> Result<CWord, String> {
    let mut syms = Vec::new();
    let mut links = Vec::new();
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let parse_sym = |chars: &[char], pos: &mut usize| -> Result<Sym, String> {
        let kind = match chars.get(*pos) {
            Some('x') => SymKind::X,
            Some('y') => SymKind::Y,
            Some('z') => SymKind::Z,
            Some('r') => SymKind::R,
            Some('p') => SymKind::P,
            Some('q') => SymKind::Q,
            other => return Err(format!("expected a symbol letter, got {other:?}")),
        };
        *pos += 1;
        let bracket = chars.get(*pos) == Some(&'[');
        if bracket {
            *pos += 1;
        }
        let start = *pos;
        if bracket && chars.get(*pos) == Some(&'-') {
            *pos += 1;
        }
        while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
            *pos += 1;
        }
        if start == *pos {
            return Err("expected an index".into());
        }
        let idx: i64 = chars[start..*pos].iter().collect::<String>().parse().map_err(|_| "bad index")?;
        if bracket {
            if chars.get(*pos) != Some(&']') {
                return Err("expected closing bracket".into());
            }
            *pos += 1;
        }
        Ok(Sym::new(kind, idx))
    };
    syms.push(parse_sym(&chars, &mut pos)?);
    while pos < chars.len() {
        let link = match chars[pos] {
            '~' => Link::Tilde,
            '-' => Link::Dash,
            c => return Err(format!("expected a link, got {c:?}")),
        };
        pos += 1;
        links.push(link);
        syms.push(parse_sym(&chars, &mut pos)?);
    }
    Ok(CWord { syms, links })
}

/// A string per the classification: the simple full words, graded by how
/// many free two-element-class ends they carry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StringSpec {
    Usual { word: CWord },
    /// `k` picks the minus (0) or plus (1) element at the unique free end.
    Special { word: CWord, k: u8 },
    /// Both ends free: flags for each end plus a winding multiplicity.
    Bispecial { word: CWord, k: u8, l: u8, n: usize },
}

impl StringSpec {
    pub fn word(&self) -> &CWord {
        match self {
            StringSpec::Usual { word } => word,
            StringSpec::Special { word, .. } => word,
            StringSpec::Bispecial { word, .. } => word,
        }
    }

    pub fn is_bispecial(&self) -> bool {
        matches!(self, StringSpec::Bispecial { .. })
    }
}

impl fmt::Display for StringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringSpec::Usual { word } => write!(f, "{word}"),
            StringSpec::Special { word, k } => write!(f, "({word}, {k})"),
            StringSpec::Bispecial { word, k, l, n } => write!(f, "({word}, {k}, {l}, {n})"),
        }
    }
}

/// Canonical representative of a word up to reversal.
pub fn canonical_string_word(w: &CWord) -> CWord {
    let a = w.normalized();
    let b = w.reverse().normalized();
    if b < a {
        b
    } else {
        a
    }
}

/// Canonical representative of a cycle up to even rotation and reversal.
pub fn canonical_cycle_word(w: &CWord) -> CWord {
    let mut best: Option<CWord> = None;
    for cand in cycle_forms(w) {
        let c = cand.normalized();
        if best.as_ref().is_none_or(|b| &c < b) {
            best = Some(c);
        }
    }
    best.unwrap()
}

/// All phase-respecting presentations of a cycle: rotations by even offsets
/// of the word and of its reversal.
pub fn cycle_forms(w: &CWord) -> Vec<CWord> {
    let m = w.links.len();
    let mut out = Vec::new();
    let rotate = |w: &CWord, by: usize| -> CWord {
        // positions 0..m with syms[m] == syms[0]
        let mut syms: Vec<Sym> = (0..=m).map(|k| w.syms[(by + k) % m]).collect();
        let links: Vec<Link> = (0..m).map(|k| w.links[(by + k) % m]).collect();
        syms[m] = syms[0];
        CWord { syms, links }
    };
    for by in (0..m).step_by(2) {
        out.push(rotate(w, by));
    }
    // reversal: reverse then re-phase to a Tilde start
    let rev = {
        let mut syms = w.syms.clone();
        syms.reverse();
        let mut links = w.links.clone();
        links.reverse();
        CWord { syms, links }
    };
    for by in (1..=m).step_by(2) {
        let r = rotate(&rev, by % m);
        if r.links[0] == Link::Tilde {
            out.push(r);
        }
    }
    out
}

/// Enumerates all valid full simple words with at most `max_links` links,
/// up to translation (minimal index 0) and reversal.
pub fn enumerate_string_words(max_links: usize) -> Vec<CWord> {
    let mut seen: BTreeSet<CWord> = BTreeSet::new();
    let starts = start_symbols(max_links as i64 + 2);
    for s in starts {
        let mut stack = vec![CWord::single(s)];
        while let Some(w) = stack.pop() {
            if w.validate().is_ok() && w.is_full() && w.is_simple() {
                seen.insert(canonical_string_word(&w));
            }
            if w.links.len() == max_links {
                continue;
            }
            for (link, next) in continuations(*w.syms.last().unwrap(), w.links.last().copied()) {
                let mut nw = w.clone();
                nw.links.push(link);
                nw.syms.push(next);
                if nw.validate().is_ok() {
                    stack.push(nw);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Enumerates aperiodic cycles with at most `max_links` links, up to
/// rotation, reversal and translation.
pub fn enumerate_cycle_words(max_links: usize) -> Vec<CWord> {
    let mut seen: BTreeSet<CWord> = BTreeSet::new();
    let starts = start_symbols(max_links as i64 + 2);
    for s in starts {
        let mut stack = vec![CWord::single(s)];
        while let Some(w) = stack.pop() {
            // close into a cycle when possible
            if w.links.len() >= 2 && w.links.len() % 2 == 1 {
                let last = *w.syms.last().unwrap();
                if last.dash_related(w.syms[0]) {
                    let mut c = w.clone();
                    c.links.push(Link::Dash);
                    c.syms.push(c.syms[0]);
                    if c.validate().is_ok() && c.is_cycle() && c.is_aperiodic() {
                        seen.insert(canonical_cycle_word(&c));
                    }
                }
            }
            if w.links.len() + 1 > max_links {
                continue;
            }
            for (link, next) in continuations(*w.syms.last().unwrap(), w.links.last().copied()) {
                // a cycle starts with a tilde link
                if w.links.is_empty() && link == Link::Dash {
                    continue;
                }
                let mut nw = w.clone();
                nw.links.push(link);
                nw.syms.push(next);
                if nw.validate().is_ok() {
                    stack.push(nw);
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn start_symbols(reach: i64) -> Vec<Sym> {
    // starting at index 0 suffices up to translation, but tilde links can
    // step down in index, so allow a window around 0 and normalize later
    let mut out = Vec::new();
    for i in -reach..=reach {
        for kind in [SymKind::X, SymKind::Y, SymKind::Z, SymKind::R, SymKind::P, SymKind::Q] {
            out.push(Sym::new(kind, i));
        }
    }
    out
}

fn continuations(last: Sym, prev_link: Option<Link>) -> Vec<(Link, Sym)> {
    let mut out = Vec::new();
    let allow_tilde = prev_link != Some(Link::Tilde);
    let allow_dash = prev_link != Some(Link::Dash);
    if allow_tilde {
        out.push((Link::Tilde, last.tilde_partner()));
    }
    if allow_dash {
        let kinds: [SymKind; 3] = if last.kind.is_e_side() {
            [SymKind::R, SymKind::P, SymKind::Q]
        } else {
            [SymKind::X, SymKind::Y, SymKind::Z]
        };
        for k in kinds {
            out.push((Link::Dash, Sym::new(k, last.index)));
        }
    }
    out
}

/// All strings (usual, special with both flags, and optionally bispecial)
/// whose underlying word has at most `max_links` links. Bispecial strings
/// carry winding multiplicities up to `n_max`.
pub fn enumerate_strings(max_links: usize, bispecial_n_max: Option<usize>) -> Vec<StringSpec> {
    let mut out = Vec::new();
    for w in enumerate_string_words(max_links) {
        let d = w.d_l() + w.d_r();
        match d {
            0 => out.push(StringSpec::Usual { word: w }),
            1 => {
                for k in 0..=1u8 {
                    out.push(StringSpec::Special { word: w.clone(), k });
                }
            }
            2 => {
                if let Some(n_max) = bispecial_n_max {
                    for n in 1..=n_max {
                        for k in 0..=1u8 {
                            for l in 0..=1u8 {
                                out.push(StringSpec::Bispecial { word: w.clone(), k, l, n });
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
    }
    out
}

/// Deduplicates bispecial flag pairs that coincide under the reversal
/// symmetry of the underlying word: when `w` is a palindrome the pairs
/// `(k, l)` and `(l, k)` name the same object.
pub fn dedup_bispecial(specs: Vec<StringSpec>) -> Vec<StringSpec> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in specs {
        let key = match &s {
            StringSpec::Bispecial { word, k, l, n } => {
                let wn = word.normalized();
                let rn = word.reverse().normalized();
                if wn == rn {
                    let (a, b) = if k <= l { (*k, *l) } else { (*l, *k) };
                    StringSpec::Bispecial { word: wn, k: a, l: b, n: *n }
                } else {
                    s.clone()
                }
            }
            _ => s.clone(),
        };
        if seen.insert(key) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let word = w("q0~z1-p1");
        assert_eq!(word.to_string(), "q[0]~z[1]-p[1]");
        assert_eq!(w("q[0]~z[1]-p[1]"), word);
        assert_eq!(w("x[-1]").syms[0].index, -1);
    }

    #[test]
    fn spec_example_special_string() {
        let word = w("q0~z1-p1");
        let info = word.classify();
        assert!(info.valid && info.full && info.simple);
        assert_eq!((info.d_l, info.d_r), (0, 1));
    }

    #[test]
    fn clause_b_violation() {
        let word = w("r0-p0");
        let info = word.classify();
        assert!(!info.valid);
        assert!(info.violation.unwrap().contains("clause (b)"));
    }

    #[test]
    fn spec_example_cycle() {
        let word = w("p0~p0-y0~y0-p0");
        let info = word.classify();
        assert!(info.valid);
        assert!(info.cycle);
        assert!(info.aperiodic);
    }

    #[test]
    fn tilde_needs_the_relation() {
        assert!(w("r0~x2").validate().is_ok());
        assert!(w("r0~x1").validate().is_err());
        assert!(w("q0~z1").validate().is_ok());
        assert!(w("q0~q0").validate().is_err());
    }

    #[test]
    fn fullness_of_singletons() {
        // a bare x-symbol is not full (its tilde link is missing)
        assert!(!CWord::single(Sym::new(SymKind::X, 2)).is_full());
        assert!(CWord::single(Sym::new(SymKind::P, 0)).is_full());
        assert!(w("r0~x2").is_full());
        // ending in a dash at a singleton is not full
        assert!(!w("r0~x2-q2").is_full());
        assert!(w("r0~x2-q2~z3").is_full());
    }

    #[test]
    fn simplicity_excludes_winds() {
        // p ~ p = p wound twice
        let p = CWord::single(Sym::new(SymKind::P, 0));
        let wound = build_wind(&p, 2);
        assert_eq!(wound.to_string(), "p[0]~p[0]");
        assert!(wound.validate().is_ok());
        assert!(!wound.is_simple());
        // p - y wound twice
        let py = w("p0-y0");
        let wound = build_wind(&py, 2);
        assert_eq!(wound.to_string(), "p[0]-y[0]~y[0]-p[0]");
        assert!(!wound.is_simple());
        assert!(w("p0~p0-y0~y0").is_simple());
    }

    #[test]
    fn enumeration_contains_the_expected_small_strings() {
        let words = enumerate_string_words(2);
        let find = |s: &str| {
            let c = canonical_string_word(&w(s));
            words.contains(&c)
        };
        assert!(find("p0"));
        assert!(find("y0"));
        assert!(find("q0~z1"));
        assert!(find("r0~x2"));
        assert!(find("q0~z1-p1"));
        // bare singleton symbols are not full
        assert!(!words.iter().any(|c| c.syms.len() == 1 && !c.syms[0].kind.is_pair()));
    }

    #[test]
    fn string_specs_at_length_zero() {
        let specs = enumerate_strings(0, None);
        // p[0] and y[0], each special with two flags
        assert_eq!(specs.len(), 4);
        assert!(specs.iter().all(|s| matches!(s, StringSpec::Special { .. })));
    }

    #[test]
    fn band_words_exist_at_length_four() {
        let cycles = enumerate_cycle_words(4);
        let target = canonical_cycle_word(&w("p0~p0-y0~y0-p0"));
        assert!(cycles.contains(&target), "{cycles:?}");
    }

    #[test]
    fn cycle_canonicalization_identifies_rotations() {
        let a = w("p0~p0-y0~y0-p0");
        let b = w("y0~y0-p0~p0-y0");
        assert_eq!(canonical_cycle_word(&a), canonical_cycle_word(&b));
    }
}
