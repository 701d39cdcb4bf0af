//! Combinatorics of the distinguished affine cover of 𝓜_X.
//!
//! On E the opens U_a = E − {p}, U_b = E − {e} and U_c = U_a ∩ U_b give a
//! cover of Eⁿ indexed by words in {a,b}ⁿ, closed under intersection into the
//! poset J = {a,b,c}ⁿ. On 𝓜_X every open is recorded by its trace on each
//! component 𝓜_σ ≅ Eⁿ (through the chart of σ) as a word.
//!
//! A letter a at the position of ray r in a chart means the open meets the
//! divisor of the wall opposite r. Such opens must continue across that wall,
//! so an element of the cover is pinned down by the cone ρ spanned by its
//! non-a rays together with a b/c letter on each ray of ρ: it lives on the
//! top cones containing ρ, and each of those charts sees the letters of ρ and
//! a everywhere else.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fan::{Cone, Fan};
use crate::rational::{RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    /// The containment order: c lies below a and below b.
    pub fn leq(self, other: Letter) -> bool {
        self == other || self == Letter::C
    }

    pub fn meet(self, other: Letter) -> Letter {
        if self == other {
            self
        } else {
            Letter::C
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeWord(pub Vec<Letter>);

impl CubeWord {
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|ch| match ch {
                'a' => Some(Letter::A),
                'b' => Some(Letter::B),
                'c' => Some(Letter::C),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(CubeWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of c letters.
    pub fn grade(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::C).count()
    }

    pub fn leq(&self, other: &CubeWord) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(x, y)| x.leq(*y))
    }

    pub fn meet(&self, other: &CubeWord) -> CubeWord {
        CubeWord(self.0.iter().zip(&other.0).map(|(x, y)| x.meet(*y)).collect())
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl fmt::Debug for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for CubeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// J = {a,b,c}ⁿ, sorted by grade and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubePoset {
    pub n: usize,
    pub words: Vec<CubeWord>,
}

impl CubePoset {
    pub fn grade_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for w in &self.words {
            counts[w.grade()] += 1;
        }
        counts
    }

    pub fn grade(&self, k: usize) -> impl Iterator<Item = &CubeWord> {
        self.words.iter().filter(move |w| w.grade() == k)
    }
}

pub fn cube_poset(n: usize) -> CubePoset {
    let mut words: Vec<CubeWord> = (0..n)
        .map(|_| [Letter::A, Letter::B, Letter::C])
        .multi_cartesian_product()
        .map(CubeWord)
        .collect();
    if n == 0 {
        words = vec![CubeWord(Vec::new())];
    }
    words.sort_by(|x, y| (x.grade(), x).cmp(&(y.grade(), y)));
    CubePoset { n, words }
}

/// An open of 𝓜_X from the distinguished cover or its intersections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverElement {
    /// The cone ρ spanned by the rays whose letter is not a.
    pub face: Cone,
    /// Letter (b or c) of each ray of `face`.
    pub labels: Vec<Letter>,
    /// Top cones (chart ids) the open meets.
    pub support: Vec<usize>,
    /// Trace on each chart of the support, indexed by sorted ray position.
    pub words: Vec<(usize, CubeWord)>,
    pub grade: usize,
}

impl CoverElement {
    /// The element with non-a rays `face` carrying `labels`.
    pub fn new(f: &Fan, face: Cone, labels: Vec<Letter>) -> Self {
        debug_assert_eq!(face.len(), labels.len());
        let support = f.star(&face);
        let words = support
            .iter()
            .map(|&t| {
                let word = f.top_cones()[t]
                    .iter()
                    .map(|r| match face.iter().position(|x| x == r) {
                        Some(i) => labels[i],
                        None => Letter::A,
                    })
                    .collect();
                (t, CubeWord(word))
            })
            .collect();
        let grade = labels.iter().filter(|&&l| l == Letter::C).count();
        Self {
            face,
            labels,
            support,
            words,
            grade,
        }
    }

    pub fn word_on(&self, top: usize) -> Option<&CubeWord> {
        self.words.iter().find(|(t, _)| *t == top).map(|(_, w)| w)
    }

    /// Containment of opens: the support shrinks and every chart word decreases.
    pub fn leq(&self, other: &CoverElement) -> bool {
        self.words
            .iter()
            .all(|(t, w)| other.word_on(*t).is_some_and(|w2| w.leq(w2)))
    }

    /// Intersection, or `None` if the supports are disjoint.
    pub fn meet(&self, other: &CoverElement, f: &Fan) -> Option<CoverElement> {
        let face: Cone = self.face.iter().chain(&other.face).copied().sorted().dedup().collect();
        if !f.contains_cone(&face) || f.star(&face).is_empty() {
            return None;
        }
        let letter = |e: &CoverElement, r: usize| match e.face.iter().position(|&x| x == r) {
            Some(i) => e.labels[i],
            None => Letter::A,
        };
        let labels = face.iter().map(|&r| letter(self, r).meet(letter(other, r))).collect();
        Some(CoverElement::new(f, face, labels))
    }

    fn sort_key(&self) -> (usize, &[usize], &[(usize, CubeWord)]) {
        (self.grade, &self.support, &self.words)
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.words.iter().map(|(t, w)| format!("{t}:{w}")).collect();
        format!("[{}]", parts.join(" "))
    }
}

/// The cover 𝔘_X: every word in {a,b}ⁿ on every chart, spread across the walls
/// its a-letters touch.
pub fn cover(f: &Fan) -> Result<Vec<CoverElement>> {
    f.ensure_good()?;
    let n = f.ambient_rank();
    let tops = f.top_cones();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (s, sigma) in tops.iter().enumerate() {
        for letters in (0..n).map(|_| [Letter::A, Letter::B]).multi_cartesian_product() {
            let spread = spread(f, s, &CubeWord(letters.clone()));
            let face: Cone = sigma
                .iter()
                .zip(&letters)
                .filter(|(_, l)| **l != Letter::A)
                .map(|(&r, _)| r)
                .collect();
            let element = CoverElement::new(f, face.clone(), vec![Letter::B; face.len()]);
            if spread.keys().copied().collect::<Vec<_>>() != element.support {
                return Err(Error::DisconnectedStar(face));
            }
            debug_assert!(element.words.iter().all(|(t, w)| spread[t] == *w));
            if seen.insert(face) {
                out.push(element);
            }
        }
    }
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(out)
}

/// Spreads `word` on chart `start` across every wall at an a-position,
/// transporting letters along shared rays and putting a on the new ray.
fn spread(f: &Fan, start: usize, word: &CubeWord) -> BTreeMap<usize, CubeWord> {
    let tops = f.top_cones();
    let mut found = BTreeMap::from([(start, word.clone())]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        let w = found[&t].clone();
        for (pos, &ray) in tops[t].iter().enumerate() {
            if w.0[pos] != Letter::A {
                continue;
            }
            let wall: Cone = tops[t].iter().copied().filter(|&r| r != ray).collect();
            for u in f.star(&wall) {
                if u == t || found.contains_key(&u) {
                    continue;
                }
                let moved = tops[u]
                    .iter()
                    .map(|r| match tops[t].iter().position(|x| x == r) {
                        Some(i) => w.0[i],
                        None => Letter::A,
                    })
                    .collect();
                found.insert(u, CubeWord(moved));
                queue.push_back(u);
            }
        }
    }
    found
}

/// The intersection-closed graded poset J_X generated by the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CechPoset {
    pub ambient_rank: usize,
    pub elements: Vec<CoverElement>,
}

pub fn cech_poset(f: &Fan) -> Result<CechPoset> {
    let mut elements = cover(f)?;
    let mut keys: BTreeSet<(Cone, Vec<Letter>)> = elements.iter().map(|e| (e.face.clone(), e.labels.clone())).collect();
    let mut frontier = 0;
    while frontier < elements.len() {
        let end = elements.len();
        let mut fresh = Vec::new();
        for i in 0..end {
            for j in frontier.max(i + 1)..end {
                if let Some(m) = elements[i].meet(&elements[j], f) {
                    if keys.insert((m.face.clone(), m.labels.clone())) {
                        fresh.push(m);
                    }
                }
            }
        }
        frontier = end;
        elements.extend(fresh);
    }
    elements.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(CechPoset {
        ambient_rank: f.ambient_rank(),
        elements,
    })
}

impl CechPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn grade(&self, k: usize) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i].grade == k)
            .collect()
    }

    pub fn grade_counts(&self) -> Vec<usize> {
        (0..=self.ambient_rank).map(|k| self.grade(k).len()).collect()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].leq(&self.elements[j])
    }

    /// Histogram of support sizes: entry s counts elements meeting s charts.
    pub fn support_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for e in &self.elements {
            *h.entry(e.support.len()).or_default() += 1;
        }
        h
    }

    /// Index of the element with the given support and words.
    pub fn find(&self, words: &[(usize, CubeWord)]) -> Option<usize> {
        self.elements.iter().position(|e| e.words == words)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    SmoothIrreducible,
    /// One irreducible component per chart; `a_positions` lists, per chart,
    /// the positions carrying a (the divisor positions in grade n−1).
    Singular {
        components: Vec<usize>,
        a_positions: Vec<(usize, Vec<usize>)>,
    },
}

/// An open is smooth exactly when it lies on a single component.
pub fn classify(e: &CoverElement) -> Classification {
    if e.support.len() <= 1 {
        return Classification::SmoothIrreducible;
    }
    Classification::Singular {
        components: e.support.clone(),
        a_positions: e
            .words
            .iter()
            .map(|(t, w)| (*t, w.0.iter().positions(|&l| l == Letter::A).collect()))
            .collect(),
    }
}

/// For a singular element of grade n−1 (an interior wall with all letters c),
/// its two components and the smooth grade-(n−1) opens containing them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub element: usize,
    /// Grade-n elements V, W: the chart pieces (σ, c…c).
    pub components: [usize; 2],
    /// Smooth elements with b at the divisor position and c elsewhere,
    /// containing V and W respectively.
    pub smooth_covers: [usize; 2],
    /// Divisor position l in each of the two charts.
    pub divisor_positions: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohoWitness {
    pub entries: Vec<WitnessEntry>,
    pub success: bool,
}

pub fn coho_witness(f: &Fan) -> Result<CohoWitness> {
    let poset = cech_poset(f)?;
    coho_witness_in(&poset)
}

pub fn coho_witness_in(poset: &CechPoset) -> Result<CohoWitness> {
    let n = poset.ambient_rank;
    let mut entries = Vec::new();
    for i in poset.grade(n.saturating_sub(1)) {
        let e = &poset.elements[i];
        let Classification::Singular { a_positions, .. } = classify(e) else {
            continue;
        };
        let missing = || Error::WitnessNotFound(e.describe());
        if a_positions.len() != 2 || a_positions.iter().any(|(_, p)| p.len() != 1) {
            return Err(missing());
        }
        let mut components = [0; 2];
        let mut covers = [0; 2];
        let mut positions = [0; 2];
        for (k, (top, pos)) in a_positions.iter().enumerate() {
            let l = pos[0];
            let all_c = CubeWord(vec![Letter::C; n]);
            let mut pattern = all_c.clone();
            pattern.0[l] = Letter::B;
            let v = poset.find(&[(*top, all_c)]).ok_or_else(missing)?;
            let cover = poset.find(&[(*top, pattern)]).ok_or_else(missing)?;
            if !(poset.leq(v, i) && poset.leq(v, cover))
                || classify(&poset.elements[cover]) != Classification::SmoothIrreducible
            {
                return Err(missing());
            }
            components[k] = v;
            covers[k] = cover;
            positions[k] = l;
        }
        entries.push(WitnessEntry {
            element: i,
            components,
            smooth_covers: covers,
            divisor_positions: positions,
        });
    }
    Ok(CohoWitness { entries, success: true })
}

/// Index-level data of the two Čech-type complexes: R• for 𝓜_X, with one
/// summand per poset element, and Q• for its normalization, with one summand
/// per (element, chart) pair. Arrows are restrictions; signs are not tracked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallComplexes {
    /// `r_terms[k]`: elements of grade k.
    pub r_terms: Vec<Vec<usize>>,
    /// (l, j) with U_j ⊂ U_l and grade j = grade l + 1.
    pub r_arrows: Vec<(usize, usize)>,
    /// `q_terms[k]`: (element, chart) pairs of grade k.
    pub q_terms: Vec<Vec<(usize, usize)>>,
    pub q_arrows: Vec<((usize, usize), (usize, usize))>,
    /// π*: each R summand maps to its chart pieces.
    pub pullback: Vec<(usize, Vec<(usize, usize)>)>,
}

pub fn small_complexes(poset: &CechPoset) -> SmallComplexes {
    let n = poset.ambient_rank;
    let r_terms: Vec<Vec<usize>> = (0..=n).map(|k| poset.grade(k)).collect();
    let mut r_arrows = Vec::new();
    let mut q_arrows = Vec::new();
    for k in 0..n {
        for &l in &r_terms[k] {
            for &j in &r_terms[k + 1] {
                if poset.leq(j, l) {
                    r_arrows.push((l, j));
                    for &t in &poset.elements[j].support {
                        q_arrows.push(((l, t), (j, t)));
                    }
                }
            }
        }
    }
    let pieces = |i: usize| -> Vec<(usize, usize)> { poset.elements[i].support.iter().map(|&t| (i, t)).collect() };
    SmallComplexes {
        q_terms: r_terms
            .iter()
            .map(|g| g.iter().flat_map(|&i| pieces(i)).collect())
            .collect(),
        pullback: (0..poset.len()).map(|i| (i, pieces(i))).collect(),
        r_terms,
        r_arrows,
        q_arrows,
    }
}

/// A bounded cochain complex of finite-dimensional ℚ-vector spaces,
/// C⁰ → C¹ → … with `differentials[k]: C^k → C^{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex {
    dims: Vec<usize>,
    differentials: Vec<RatMatrix>,
    labels: Option<Vec<Vec<String>>>,
}

impl FiniteComplex {
    pub fn new(dims: Vec<usize>, differentials: Vec<RatMatrix>) -> Result<Self> {
        if differentials.len() + 1 != dims.len().max(1) {
            return Err(Error::DimensionMismatch {
                expected: dims.len().saturating_sub(1),
                found: differentials.len(),
            });
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.rows() != dims[k + 1] || d.cols() != dims[k] {
                return Err(Error::DimensionMismatch {
                    expected: dims[k],
                    found: d.cols(),
                });
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k].mul(&differentials[k - 1])?.is_zero() {
                return Err(Error::NotAComplex { degree: k - 1 });
            }
        }
        Ok(Self {
            dims,
            differentials,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.len() != self.dims.len() || labels.iter().zip(&self.dims).any(|(l, &d)| l.len() != d) {
            return Err(Error::Schema("one label per basis vector is required".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, k: usize) -> &RatMatrix {
        &self.differentials[k]
    }

    pub fn labels(&self) -> Option<&[Vec<String>]> {
        self.labels.as_deref()
    }

    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(RatMatrix::rank).collect();
        (0..self.dims.len())
            .map(|k| {
                let out = if k < ranks.len() { ranks[k] } else { 0 };
                let inc = if k > 0 { ranks[k - 1] } else { 0 };
                self.dims[k] - out - inc
            })
            .collect()
    }
}

/// Splitting C^i = B^i ⊕ K^i, C^{i+1} = B^{i+1} ⊕ K^{i+1} by basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub k_source: Vec<usize>,
    pub k_target: Vec<usize>,
}

/// Cancels the block K^i → K^{i+1} of d^i, which must be invertible.
///
/// The new differential on B^i is d_BB − d_BK σ⁻¹ d_KB with σ = d_KK; the
/// neighbouring differentials are restricted to B.
pub fn reduce_complex(c: &FiniteComplex, i: usize, splitting: &Splitting) -> Result<FiniteComplex> {
    if i >= c.differentials.len() {
        return Err(Error::DimensionMismatch {
            expected: c.differentials.len(),
            found: i,
        });
    }
    let complement = |dim: usize, k: &[usize]| -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = k.iter().copied().collect();
        if set.len() != k.len() || set.iter().any(|&x| x >= dim) {
            return Err(Error::NotInvertibleBlock);
        }
        Ok((0..dim).filter(|x| !set.contains(x)).collect())
    };
    let (ks, kt) = (&splitting.k_source, &splitting.k_target);
    let bs = complement(c.dims[i], ks)?;
    let bt = complement(c.dims[i + 1], kt)?;
    let phi = &c.differentials[i];
    let sigma = phi.select(kt, ks);
    let sigma_inv = if ks.len() == kt.len() { sigma.inverse() } else { None }.ok_or(Error::NotInvertibleBlock)?;
    let correction = phi.select(&bt, ks).mul(&sigma_inv)?.mul(&phi.select(kt, &bs))?;
    let psi = phi.select(&bt, &bs).sub(&correction);

    let mut dims = c.dims.clone();
    dims[i] = bs.len();
    dims[i + 1] = bt.len();
    let mut differentials = c.differentials.clone();
    differentials[i] = psi;
    if i > 0 {
        let prev = &c.differentials[i - 1];
        differentials[i - 1] = prev.select(&bs, &(0..prev.cols()).collect::<Vec<_>>());
    }
    if i + 1 < c.differentials.len() {
        let next = &c.differentials[i + 1];
        differentials[i + 1] = next.select(&(0..next.rows()).collect::<Vec<_>>(), &bt);
    }
    let mut out = FiniteComplex::new(dims, differentials)?;
    if let Some(labels) = &c.labels {
        let mut labels = labels.clone();
        labels[i] = bs.iter().map(|&x| labels[i][x].clone()).collect();
        labels[i + 1] = bt.iter().map(|&x| labels[i + 1][x].clone()).collect();
        out.labels = Some(labels);
    }
    Ok(out)
}

/// The Čech complex of the cover {U_w : w ∈ {a,b}ⁿ} of Eⁿ at index level:
/// one basis vector per nonempty set of opens (ordered lexicographically),
/// labelled by the word of the intersection, with alternating-sign restrictions.
pub fn cech_nerve_complex(n: usize) -> FiniteComplex {
    let opens: Vec<CubeWord> = (0..n)
        .map(|_| [Letter::A, Letter::B])
        .multi_cartesian_product()
        .map(CubeWord)
        .collect();
    let m = opens.len();
    let simplices: Vec<Vec<Vec<usize>>> = (1..=m).map(|k| (0..m).combinations(k).collect()).collect();
    let label = |s: &[usize]| -> String {
        s[1..]
            .iter()
            .fold(opens[s[0]].clone(), |acc, &i| acc.meet(&opens[i]))
            .to_string()
    };
    let mut differentials = Vec::new();
    for k in 0..m - 1 {
        let index: BTreeMap<&Vec<usize>, usize> = simplices[k].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut d = RatMatrix::zeros(simplices[k + 1].len(), simplices[k].len());
        for (row, s) in simplices[k + 1].iter().enumerate() {
            for j in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(x, _)| x != j).map(|(_, &v)| v).collect();
                let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
                d.set(row, index[&face], sign);
            }
        }
        differentials.push(d);
    }
    let dims = simplices.iter().map(Vec::len).collect();
    let labels = simplices.iter().map(|g| g.iter().map(|s| label(s)).collect()).collect();
    FiniteComplex::new(dims, differentials)
        .and_then(|c| c.with_labels(labels))
        .expect("the Čech differential squares to zero")
}

/// A cancelled pair: basis vector `source` of C^degree against `target` of C^{degree+1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancelledPair {
    pub degree: usize,
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// Repeatedly cancels a summand against an equally labelled summand one
/// degree up when the restriction between them is an isomorphism (a nonzero
/// entry), until no such pair is left.
pub fn cancel_matching_pairs(c: &FiniteComplex) -> Result<(FiniteComplex, Vec<CancelledPair>)> {
    let mut cur = c.clone();
    let mut pairs = Vec::new();
    let labels_missing = || Error::Schema("complex has no labels".into());
    loop {
        let labels = cur.labels.clone().ok_or_else(labels_missing)?;
        let found = (0..cur.differentials.len()).find_map(|k| {
            let d = &cur.differentials[k];
            (0..d.cols()).find_map(|s| {
                (0..d.rows())
                    .find(|&t| !d.get(t, s).is_zero() && labels[k][s] == labels[k + 1][t])
                    .map(|t| (k, s, t))
            })
        });
        let Some((k, s, t)) = found else {
            return Ok((cur, pairs));
        };
        pairs.push(CancelledPair {
            degree: k,
            label: labels[k][s].clone(),
            source: s,
            target: t,
        });
        cur = reduce_complex(
            &cur,
            k,
            &Splitting {
                k_source: vec![s],
                k_target: vec![t],
            },
        )?;
    }
}
