//! Concrete signed-permutation models for the A, B and D families, the
//! dictionaries between them and the abstract engine, and the explicit
//! zero-excess constructions (bicolored Coxeter elements, minimal cuspidal
//! elements of B/D, and the symmetric-group family with large reflection
//! excess).
//!
//! Signed permutations act on the right, as is customary for permutations:
//! `i · (στ)` is `(i·σ)·τ`. A signed cycle `(ε₁a₁ ε₂a₂ … εₖaₖ)` maps
//! `aᵢ ↦ εᵢ·aᵢ₊₁`; the sign written over a point applies to the image of
//! that point. The dictionary into the engine inverts, so that products
//! correspond: `to_element(σ·τ) = multiply(to_element(σ), to_element(τ))`.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::system::CoxeterSystem;
use crate::types::Component;
use std::collections::HashMap;
use std::fmt;

/// A signed permutation of {1, …, n}: a bijection with a sign per point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    /// image[i-1] = |i·σ| (1-based)
    image: Vec<usize>,
    /// sign[i-1]: whether i·σ is negative
    sign: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { image: (1..=n).collect(), sign: vec![false; n] }
    }

    /// One-line notation: the signed image of each point, e.g. `[-2, 1, -3]`.
    pub fn from_images(images: &[i64]) -> Result<Self> {
        let n = images.len();
        let mut image = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &v in images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::SignedPerm(format!("{images:?} is not a signed permutation")));
            }
            seen[a - 1] = true;
            image.push(a);
            sign.push(v < 0);
        }
        Ok(SignedPermutation { image, sign })
    }

    /// Build from signed cycles: each cycle is a list of signed points, and
    /// `(ε₁a₁ … εₖaₖ)` maps `aᵢ ↦ εᵢ·aᵢ₊₁` (cyclically). Points omitted from
    /// every cycle are fixed with positive sign; a one-point cycle `(-a)`
    /// negates `a`.
    pub fn from_cycles(n: usize, cycles: &[Vec<i64>]) -> Result<Self> {
        let mut sp = SignedPermutation::identity(n);
        let mut used = vec![false; n];
        for cycle in cycles {
            if cycle.is_empty() {
                continue;
            }
            for (pos, &entry) in cycle.iter().enumerate() {
                let a = entry.unsigned_abs() as usize;
                if a == 0 || a > n {
                    return Err(Error::SignedPerm(format!("point {a} out of range 1..={n}")));
                }
                if used[a - 1] {
                    return Err(Error::SignedPerm(format!("point {a} appears twice")));
                }
                used[a - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()].unsigned_abs() as usize;
                sp.image[a - 1] = next;
                sp.sign[a - 1] = entry < 0;
            }
        }
        Ok(sp)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Signed image of a 1-based point: (target, negated).
    pub fn apply(&self, point: usize) -> (usize, bool) {
        (self.image[point - 1], self.sign[point - 1])
    }

    /// Right-action composition: `i·(self·other) = (i·self)·other`.
    pub fn then(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.degree(), other.degree());
        let n = self.degree();
        let mut image = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        for i in 1..=n {
            let (j, s1) = self.apply(i);
            let (k, s2) = other.apply(j);
            image.push(k);
            sign.push(s1 ^ s2);
        }
        SignedPermutation { image, sign }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.degree();
        let mut image = vec![0; n];
        let mut sign = vec![false; n];
        for i in 1..=n {
            let (j, s) = self.apply(i);
            image[j - 1] = i;
            sign[j - 1] = s;
        }
        SignedPermutation { image, sign }
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPermutation::identity(self.degree())
    }

    pub fn squares_to_identity(&self) -> bool {
        self.then(self).is_identity()
    }

    pub fn is_all_positive(&self) -> bool {
        self.sign.iter().all(|&s| !s)
    }

    pub fn minus_count(&self) -> usize {
        self.sign.iter().filter(|&&s| s).count()
    }

    /// W(D_n) consists of the positive elements of W(B_n): an even number of
    /// minus signs in total.
    pub fn is_positive_element(&self) -> bool {
        self.minus_count() % 2 == 0
    }

    /// Points moved by the underlying unsigned permutation.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.image[i - 1] != i || self.sign[i - 1]).collect()
    }

    /// Disjoint cycles, each with the points in traversal order from its
    /// least point, and the cycle's sign type (negative iff it carries an
    /// odd number of minus signs). Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<(Vec<usize>, bool)> {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut points = Vec::new();
            let mut negative = false;
            let mut i = start;
            loop {
                visited[i - 1] = true;
                points.push(i);
                negative ^= self.sign[i - 1];
                i = self.image[i - 1];
                if i == start {
                    break;
                }
            }
            out.push((points, negative));
        }
        out
    }

    pub fn cycle_type(&self) -> SignedCycleType {
        let mut parts: Vec<(usize, bool)> =
            self.cycles().into_iter().map(|(pts, neg)| (pts.len(), neg)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType(parts)
    }

    /// Number of inversions: the Coxeter length in Sym(n) for an
    /// all-positive permutation.
    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// n - (number of cycles): the reflection length in Sym(n).
    pub fn sym_reflection_length(&self) -> usize {
        self.degree() - self.cycles().len()
    }

    /// One-line notation, e.g. `+2 -1 +3`.
    pub fn one_line(&self) -> String {
        (1..=self.degree())
            .map(|i| {
                let (j, neg) = self.apply(i);
                format!("{}{}", if neg { "-" } else { "+" }, j)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse one-line notation as produced by [`Self::one_line`].
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let images: Vec<i64> = s
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| Error::SignedPerm(format!("bad token {tok:?}"))))
            .collect::<Result<_>>()?;
        if images.is_empty() {
            return Err(Error::SignedPerm("empty one-line notation".into()));
        }
        Self::from_images(&images)
    }

    /// Cycle notation. Positive fixed points are omitted; when every sign is
    /// positive the signs are left out too.
    pub fn cycle_string(&self) -> String {
        let all_positive = self.is_all_positive();
        let mut out = String::new();
        for (points, _) in self.cycles() {
            if points.len() == 1 && !self.sign[points[0] - 1] {
                continue;
            }
            out.push('(');
            for (k, &p) in points.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                if !all_positive {
                    out.push(if self.sign[p - 1] { '-' } else { '+' });
                }
                out.push_str(&p.to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation[{}]", self.one_line())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// Multiset of (cycle length, sign type), sorted descending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SignedCycleType(pub Vec<(usize, bool)>);

impl SignedCycleType {
    pub fn is_all_negative(&self) -> bool {
        self.0.iter().all(|&(_, neg)| neg)
    }

    /// The partition of the cycle lengths, descending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.iter().map(|&(l, _)| l).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(len, neg)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{len}{}", if neg { "-" } else { "+" })?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Dictionary between signed permutations and engine elements

/// Which concrete family a system models.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermFamily {
    A,
    B,
    D,
}

fn perm_family(sys: &CoxeterSystem) -> Result<(PermFamily, usize)> {
    let &[comp] = sys.coxeter_type().components() else {
        return Err(Error::SignedPerm("signed-permutation model needs an irreducible system".into()));
    };
    match comp {
        Component::A(n) => Ok((PermFamily::A, n + 1)),
        Component::B(n) => Ok((PermFamily::B, n)),
        Component::D(n) => Ok((PermFamily::D, n)),
        other => Err(Error::SignedPerm(format!("{other} has no signed-permutation model"))),
    }
}

/// e-basis coordinates of the simple roots: A has α_i = e_i − e_{i+1} in
/// n+1 coordinates, B appends the short root e_n, D the root e_{n-1} + e_n.
fn simple_root_e_coords(family: PermFamily, points: usize) -> Vec<Vec<Scalar>> {
    let rank = match family {
        PermFamily::A => points - 1,
        _ => points,
    };
    let mut simples = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut v = vec![Scalar::zero(); points];
        match family {
            PermFamily::A => {
                v[i] = Scalar::one();
                v[i + 1] = Scalar::from_int(-1);
            }
            PermFamily::B => {
                if i + 1 < rank {
                    v[i] = Scalar::one();
                    v[i + 1] = Scalar::from_int(-1);
                } else {
                    v[i] = Scalar::one();
                }
            }
            PermFamily::D => {
                if i + 1 < rank {
                    v[i] = Scalar::one();
                    v[i + 1] = Scalar::from_int(-1);
                } else {
                    v[i - 1] = Scalar::one();
                    v[i] = Scalar::one();
                }
            }
        }
        simples.push(v);
    }
    simples
}

struct ECoordDictionary {
    family: PermFamily,
    points: usize,
    /// global root index -> e-coordinates
    root_e: Vec<Vec<Scalar>>,
    /// e-coordinates -> global root index
    index: HashMap<Vec<Scalar>, usize>,
}

impl ECoordDictionary {
    fn new(sys: &CoxeterSystem) -> Result<Self> {
        let (family, points) = perm_family(sys)?;
        let simples = simple_root_e_coords(family, points);
        let mut root_e = Vec::with_capacity(sys.n_positive_roots());
        let mut index = HashMap::new();
        for g in 0..sys.n_positive_roots() {
            let pi = sys.root_coordinates(g).expect("A/B/D systems have coordinates");
            let mut v = vec![Scalar::zero(); points];
            for (k, c) in pi.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, s) in simples[k].iter().enumerate() {
                    v[t] = &v[t] + &(c * s);
                }
            }
            index.insert(v.clone(), g);
            root_e.push(v);
        }
        Ok(ECoordDictionary { family, points, root_e, index })
    }

    fn signed_lookup(&self, v: &[Scalar]) -> Option<(usize, bool)> {
        if let Some(&g) = self.index.get(v) {
            return Some((g, false));
        }
        let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&g| (g, true))
    }

    /// Apply the right action of sp to an e-basis vector.
    fn act(&self, sp: &SignedPermutation, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.points];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, neg) = sp.apply(i + 1);
            let contrib = if neg { -c } else { c.clone() };
            out[j - 1] = &out[j - 1] + &contrib;
        }
        out
    }
}

fn check_membership(family: PermFamily, sp: &SignedPermutation, points: usize) -> Result<()> {
    if sp.degree() != points {
        return Err(Error::SignedPerm(format!(
            "degree {} does not match the system ({points} points)",
            sp.degree()
        )));
    }
    match family {
        PermFamily::A => {
            if !sp.is_all_positive() {
                return Err(Error::SignedPerm("type A admits no signs".into()));
            }
        }
        PermFamily::B => {}
        PermFamily::D => {
            if !sp.is_positive_element() {
                return Err(Error::SignedPerm(
                    "type D contains only positive elements (even number of minus signs)".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Engine element of a signed permutation. The map is the group isomorphism
/// extending `fundamental reflection ↦ generator`; because permutations act
/// on the right and the engine acts on the left, the element's action on the
/// reflection module is `v ↦ v·σ⁻¹`.
pub fn to_element(sp: &SignedPermutation, sys: &CoxeterSystem) -> Result<Element> {
    let dict = ECoordDictionary::new(sys)?;
    check_membership(dict.family, sp, dict.points)?;
    let sinv = sp.inverse();
    let mut raw = vec![0u8; sys.n_positive_roots()];
    for (g, slot) in raw.iter_mut().enumerate() {
        let img = dict.act(&sinv, &dict.root_e[g]);
        let (target, neg) = dict
            .signed_lookup(&img)
            .ok_or_else(|| Error::Internal("signed permutation left the root system".into()))?;
        *slot = Element::pack(target, neg);
    }
    Ok(Element::from_raw(raw))
}

/// Inverse dictionary: recover the signed permutation of an engine element.
pub fn from_element(w: &Element, sys: &CoxeterSystem) -> Result<SignedPermutation> {
    let dict = ECoordDictionary::new(sys)?;
    let points = dict.points;
    // w(root) as an e-vector, sign included
    let act_root = |g: usize| -> Vec<Scalar> {
        let (target, neg) = w.lookup(g);
        dict.root_e[target].iter().map(|x| if neg { -x } else { x.clone() }).collect()
    };
    // τ with e_i·τ = w(e_i); then σ = τ⁻¹.
    let mut image = vec![0usize; points];
    let mut sign = vec![false; points];
    let mut assign = |i: usize, v: &[Scalar]| -> Result<()> {
        let mut found = None;
        for (t, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() {
                return Err(Error::Internal("image of a basis vector is not ±e_j".into()));
            }
            found = Some((t + 1, c.is_negative()));
            if !(c == &Scalar::one() || c == &Scalar::from_int(-1)) {
                return Err(Error::Internal("non-unit coefficient in basis image".into()));
            }
        }
        let (j, neg) = found.ok_or_else(|| Error::Internal("zero image of basis vector".into()))?;
        image[i - 1] = j;
        sign[i - 1] = neg;
        Ok(())
    };
    match dict.family {
        PermFamily::A => {
            // Chain through w(e_i - e_{i+1}) = e_{a} - e_{b}: relative images
            // determine the permutation; all signs positive.
            let root_of = |i: usize| -> usize {
                // simple root α_{i+1} has global index i
                i
            };
            // w(e_i) - w(e_{i+1}) for i = 0..points-1: recover successive points.
            let mut imgs: Vec<usize> = vec![0; points];
            let first = act_root(root_of(0));
            let (mut prev, mut seen_neg) = (0usize, false);
            for (t, c) in first.iter().enumerate() {
                if c == &Scalar::one() {
                    imgs[0] = t + 1;
                } else if c == &Scalar::from_int(-1) {
                    prev = t + 1;
                    seen_neg = true;
                }
            }
            if imgs[0] == 0 || !seen_neg {
                return Err(Error::Internal("unexpected image of a type A root".into()));
            }
            imgs[1] = prev;
            for i in 1..points - 1 {
                let v = act_root(root_of(i));
                // v = e_{imgs[i]} - e_{imgs[i+1]}
                let mut next = 0;
                for (t, c) in v.iter().enumerate() {
                    if c == &Scalar::from_int(-1) {
                        next = t + 1;
                    } else if c == &Scalar::one() && t + 1 != imgs[i] {
                        return Err(Error::Internal("inconsistent chain in type A recovery".into()));
                    }
                }
                imgs[i + 1] = next;
            }
            for (i, &j) in imgs.iter().enumerate() {
                image[i] = j;
            }
        }
        PermFamily::B => {
            // every e_i is a (short) root
            for i in 1..=points {
                let mut e = vec![Scalar::zero(); points];
                e[i - 1] = Scalar::one();
                let g = *dict.index.get(&e).expect("e_i is a root of B_n");
                assign(i, &act_root(g))?;
            }
        }
        PermFamily::D => {
            // e_i = ((e_i - e_n) + (e_i + e_n))/2 for i < n, and
            // e_n = ((e_{n-1} + e_n) - (e_{n-1} - e_n))/2
            let coord = |i: usize, j: usize, plus: bool| -> usize {
                let mut v = vec![Scalar::zero(); points];
                v[i - 1] = Scalar::one();
                v[j - 1] = if plus { Scalar::one() } else { Scalar::from_int(-1) };
                *dict.index.get(&v).expect("e_i ± e_j is a root of D_n")
            };
            let half = |a: &[Scalar], b: &[Scalar], add: bool| -> Vec<Scalar> {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let s = if add { x + y } else { x - y };
                        s.div_int(2)
                    })
                    .collect()
            };
            for i in 1..points {
                let minus = act_root(coord(i, points, false));
                let plus = act_root(coord(i, points, true));
                assign(i, &half(&minus, &plus, true))?;
            }
            let plus = act_root(coord(points - 1, points, true));
            let minus = act_root(coord(points - 1, points, false));
            assign(points, &half(&plus, &minus, false))?;
        }
    }
    let tau = SignedPermutation { image, sign };
    Ok(tau.inverse())
}

// ---------------------------------------------------------------------------
// Explicit constructions

/// A two-coloring construction of a Coxeter element: the Coxeter graph of a
/// finite group is a forest, so R splits as R₁ ⊔ R₂ with each part consisting
/// of pairwise commuting generators. x = ∏R₁ and y = ∏R₂ are involutions and
/// w = xy is a minimal-length element of the Coxeter class with e = E = 0.
pub struct BicoloredCoxeter {
    pub part_one: Vec<usize>,
    pub part_two: Vec<usize>,
    pub x: Element,
    pub y: Element,
    pub w: Element,
}

pub fn coxeter_bicolored(sys: &CoxeterSystem) -> BicoloredCoxeter {
    let rank = sys.rank();
    // Deterministic 2-coloring: BFS from the lowest-index node of each tree.
    let mut color = vec![None; rank];
    for start in 0..rank {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(0u8);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..rank {
                if v != u && sys.bond(u, v) >= 3 {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - color[u].unwrap());
                            queue.push_back(v);
                        }
                        Some(c) => {
                            debug_assert_ne!(c, color[u].unwrap(), "Coxeter graph is a forest");
                        }
                    }
                }
            }
        }
    }
    let part_one: Vec<usize> = (0..rank).filter(|&g| color[g] == Some(0)).collect();
    let part_two: Vec<usize> = (0..rank).filter(|&g| color[g] == Some(1)).collect();
    let product = |gens: &[usize]| {
        gens.iter().fold(sys.identity(), |acc, &g| sys.multiply(&acc, &sys.generator(g)))
    };
    let x = product(&part_one);
    let y = product(&part_two);
    let w = sys.multiply(&x, &y);
    BicoloredCoxeter { part_one, part_two, x, y, w }
}

/// A non-increasing partition λ of n, labelling a cuspidal class of B_n or
/// D_n (all cycles negative, lengths λᵢ). ν_i and μ_i are the partial sums
/// below and above part i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CuspidalPartition {
    parts: Vec<usize>,
}

impl CuspidalPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::SignedPerm("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CuspidalPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ν_i = λ₁ + … + λ_{i-1} (0-based i).
    pub fn nu(&self, i: usize) -> usize {
        self.parts[..i].iter().sum()
    }

    /// μ_i = λ_{i+1} + … + λ_k (0-based i).
    pub fn mu(&self, i: usize) -> usize {
        self.parts[i + 1..].iter().sum()
    }

    /// Every valid partition of n, non-increasing.
    pub fn all_of(n: usize) -> Vec<CuspidalPartition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(n, n, &mut Vec::new(), &mut raw);
        raw.into_iter().map(|parts| CuspidalPartition { parts }).collect()
    }
}

/// The B or D family, for the formulas that differ between them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BdFamily {
    B,
    D,
}

/// Minimal length of the cuspidal class with all-negative cycle lengths λ:
/// Σ(λᵢ + 2μᵢ) in B_n and Σ(λᵢ − 1 + 2μᵢ) in D_n. For D the number of
/// parts must be even (positivity of the elements).
pub fn cuspidal_min_length(lambda: &CuspidalPartition, family: BdFamily) -> Result<usize> {
    if family == BdFamily::D && lambda.parts.len() % 2 != 0 {
        return Err(Error::SignedPerm(
            "cuspidal classes of D_n need an even number of negative cycles".into(),
        ));
    }
    let k = lambda.parts.len();
    let total = (0..k)
        .map(|i| {
            let li = lambda.parts[i];
            let mu = lambda.mu(i);
            match family {
                BdFamily::B => li + 2 * mu,
                BdFamily::D => li - 1 + 2 * mu,
            }
        })
        .sum();
    Ok(total)
}

/// The minimal cuspidal construction: a pair of involutions whose product is
/// an all-negative element of cycle type λ attaining the class minimum, so
/// that (τ, σ) is a zero-excess certificate.
pub struct MinCuspidal {
    pub tau: SignedPermutation,
    pub sigma: SignedPermutation,
    pub w: SignedPermutation,
    /// Σ⌈(λᵢ−1)/2⌉, the predicted ℓ(σ).
    pub sigma_length: usize,
    /// Σ⌊(λᵢ−1)/2⌋ + k + 2Σμᵢ for B (k dropped for D), the predicted ℓ(τ).
    pub tau_length: usize,
    pub min_length: usize,
}

pub fn construct_min_cuspidal(lambda: &CuspidalPartition, family: BdFamily) -> Result<MinCuspidal> {
    let min_length = cuspidal_min_length(lambda, family)?;
    let n = lambda.n();
    let mut tau_cycles: Vec<Vec<i64>> = Vec::new();
    let mut sigma_cycles: Vec<Vec<i64>> = Vec::new();
    for (i, &li) in lambda.parts.iter().enumerate() {
        let nu = lambda.nu(i) as i64;
        let li = li as i64;
        // 2-cycles (a a+1)(a+2 a+3)… up to second entry ≤ ν+λ−1 for τ,
        // up to ν+λ for σ; the start alternates with the parity of λ.
        let (tau_start, sigma_start) = if li % 2 == 1 { (1, 2) } else { (2, 1) };
        let mut a = nu + tau_start;
        while a + 1 <= nu + li - 1 {
            tau_cycles.push(vec![a, a + 1]);
            a += 2;
        }
        tau_cycles.push(vec![-(nu + li)]);
        let mut b = nu + sigma_start;
        while b + 1 <= nu + li {
            sigma_cycles.push(vec![b, b + 1]);
            b += 2;
        }
    }
    let tau = SignedPermutation::from_cycles(n, &tau_cycles)?;
    let sigma = SignedPermutation::from_cycles(n, &sigma_cycles)?;
    let w = tau.then(&sigma);
    let k = lambda.parts.len();
    let sum_mu: usize = (0..k).map(|i| lambda.mu(i)).sum();
    let sigma_length: usize = lambda.parts.iter().map(|&l| l / 2).sum(); // ⌈(l-1)/2⌉ = l/2
    let floor_sum: usize = lambda.parts.iter().map(|&l| (l - 1) / 2).sum();
    let tau_length = match family {
        BdFamily::B => floor_sum + k + 2 * sum_mu,
        BdFamily::D => floor_sum + 2 * sum_mu,
    };
    Ok(MinCuspidal { tau, sigma, w, sigma_length, tau_length, min_length })
}

/// The symmetric-group family with zero excess but reflection excess growing
/// like 4(k−1)²: two disjoint 2k-cycles w₁w₂ in Sym(4k) with an interleaving
/// involution factorization. k = 1 collapses to a pair of 2-cycles, where
/// the bound is vacuous; that degenerate case is flagged.
pub struct BigCross {
    pub w1: SignedPermutation,
    pub w2: SignedPermutation,
    pub w: SignedPermutation,
    pub x: SignedPermutation,
    pub y: SignedPermutation,
    pub degenerate: bool,
}

pub fn bigxs(k: usize) -> Result<BigCross> {
    if k == 0 {
        return Err(Error::SignedPerm("k must be at least 1".into()));
    }
    let n = 4 * k;
    if k == 1 {
        let w1 = SignedPermutation::from_cycles(n, &[vec![1, 3]])?;
        let w2 = SignedPermutation::from_cycles(n, &[vec![2, 4]])?;
        let w = w1.then(&w2);
        return Ok(BigCross {
            w1,
            w2,
            x: w.clone(),
            y: SignedPermutation::identity(n),
            w,
            degenerate: true,
        });
    }
    let ki = k as i64;
    // w1 = (1 4 6 8 ⋯ 4k-2  4k-1)
    let mut c1: Vec<i64> = vec![1];
    c1.extend((2..=(2 * ki - 1)).map(|j| 2 * j));
    c1.push(4 * ki - 1);
    // w2 = (2 4k 4k-3 4k-5 ⋯ 5 3)
    let mut c2: Vec<i64> = vec![2, 4 * ki];
    c2.extend((1..=(2 * ki - 2)).map(|j| 4 * ki - 1 - 2 * j));
    let w1 = SignedPermutation::from_cycles(n, &[c1])?;
    let w2 = SignedPermutation::from_cycles(n, &[c2])?;
    let w = w1.then(&w2);
    // x = (13)(2 4k-1)(45)(67)⋯(4k-4 4k-3)(4k-2 4k),  y = (12)(34)⋯(4k-1 4k)
    let mut xc: Vec<Vec<i64>> = vec![vec![1, 3], vec![2, 4 * ki - 1]];
    xc.extend((2..=(2 * ki - 2)).map(|j| vec![2 * j, 2 * j + 1]));
    xc.push(vec![4 * ki - 2, 4 * ki]);
    let yc: Vec<Vec<i64>> = (1..=(2 * ki)).map(|j| vec![2 * j - 1, 2 * j]).collect();
    let x = SignedPermutation::from_cycles(n, &xc)?;
    let y = SignedPermutation::from_cycles(n, &yc)?;
    Ok(BigCross { w1, w2, w, x, y, degenerate: false })
}

// ---------------------------------------------------------------------------
// Native symmetric-group excess analysis (no whole-group enumeration)

/// Exact excess data for an all-positive permutation, computed inside Sym(n)
/// with the classical formulas: ℓ by inversions, L by n − #cycles, I_w as the
/// involution members of (reverser)·C(w) with the centralizer enumerated from
/// the cycle structure. Independent of the root-system engine; serves both as
/// its oracle on type A and as the route to degrees past the enumeration
/// budget.
pub struct SymExcessReport {
    pub length: usize,
    pub reflection_length: usize,
    pub excess: usize,
    pub reflection_excess: usize,
    pub reversing_involutions: usize,
}

pub fn sym_excess(w: &SignedPermutation, max_centralizer: u64) -> Result<SymExcessReport> {
    if !w.is_all_positive() {
        return Err(Error::SignedPerm("symmetric-group analysis needs an unsigned permutation".into()));
    }
    let length = w.inversions();
    let reflection_length = w.sym_reflection_length();
    if w.squares_to_identity() {
        return Ok(SymExcessReport {
            length,
            reflection_length,
            excess: 0,
            reflection_excess: 0,
            reversing_involutions: 0,
        });
    }
    let cent = sym_centralizer(w, max_centralizer)?;
    let g = sym_conjugator(w, &w.inverse());
    debug_assert_eq!(g.inverse().then(w).then(&g), w.inverse());
    let mut e_best: Option<usize> = None;
    let mut ee_best: Option<usize> = None;
    let mut count = 0usize;
    for c in &cent {
        let x = g.then(c);
        if !x.squares_to_identity() {
            continue;
        }
        count += 1;
        let y = x.then(w); // y = x⁻¹w = xw in right-action composition? see below
        debug_assert!(y.squares_to_identity());
        let sum = x.inversions() + y.inversions();
        if e_best.map_or(true, |b| sum < b) {
            e_best = Some(sum);
        }
        if x.sym_reflection_length() + y.sym_reflection_length() == reflection_length
            && ee_best.map_or(true, |b| sum < b)
        {
            ee_best = Some(sum);
        }
    }
    let e_best = e_best.ok_or_else(|| Error::Internal("no reversing involution in Sym(n)".into()))?;
    let ee_best =
        ee_best.ok_or_else(|| Error::Internal("no reflection-additive factorization".into()))?;
    Ok(SymExcessReport {
        length,
        reflection_length,
        excess: e_best - length,
        reflection_excess: ee_best - length,
        reversing_involutions: count,
    })
}

/// All elements commuting with w, enumerated from its cycle structure:
/// independent rotations of each cycle and permutations of equal-length
/// cycles.
fn sym_centralizer(w: &SignedPermutation, budget: u64) -> Result<Vec<SignedPermutation>> {
    let n = w.degree();
    let mut by_len: std::collections::BTreeMap<usize, Vec<Vec<usize>>> = Default::default();
    for (points, _) in w.cycles() {
        by_len.entry(points.len()).or_default().push(points);
    }
    let mut order: u64 = 1;
    for (len, cycles) in &by_len {
        let a = cycles.len() as u64;
        order = order.saturating_mul((*len as u64).pow(a as u32)).saturating_mul(factorial(a));
        if order > budget {
            return Err(Error::BudgetExceeded {
                what: "symmetric-group centralizer",
                needed: order,
                budget,
            });
        }
    }
    let mut out = vec![SignedPermutation::identity(n)];
    for (len, cycles) in &by_len {
        let mut extended = Vec::new();
        for base in &out {
            for assignment in cycle_class_maps(n, *len, cycles) {
                extended.push(base.then(&assignment));
            }
        }
        out = extended;
    }
    Ok(out)
}

/// All ways to permute a family of same-length cycles with rotation offsets,
/// as permutations of {1..n} fixing everything else.
fn cycle_class_maps(n: usize, len: usize, cycles: &[Vec<usize>]) -> Vec<SignedPermutation> {
    let a = cycles.len();
    let mut perms = Vec::new();
    permutations(a, &mut |pi| {
        // offsets as a mixed-radix counter over len^a
        let mut offsets = vec![0usize; a];
        loop {
            let mut image: Vec<i64> = (1..=n as i64).collect();
            for (i, cycle) in cycles.iter().enumerate() {
                let dst = &cycles[pi[i]];
                for (t, &p) in cycle.iter().enumerate() {
                    image[p - 1] = dst[(t + offsets[i]) % len] as i64;
                }
            }
            perms.push(SignedPermutation::from_images(&image).unwrap());
            // increment
            let mut pos = 0;
            loop {
                if pos == a {
                    return;
                }
                offsets[pos] += 1;
                if offsets[pos] < len {
                    break;
                }
                offsets[pos] = 0;
                pos += 1;
            }
        }
    });
    perms
}

fn permutations(a: usize, f: &mut impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..a).collect();
    permute_rec(&mut idx, 0, f);
}

fn permute_rec(idx: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        f(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute_rec(idx, k + 1, f);
        idx.swap(k, i);
    }
}

/// A permutation conjugating `a` to `b` (same cycle type required):
/// g⁻¹·a·g = b in right-action composition.
pub fn sym_conjugator(a: &SignedPermutation, b: &SignedPermutation) -> SignedPermutation {
    let n = a.degree();
    let sort_cycles = |p: &SignedPermutation| {
        let mut cs: Vec<Vec<usize>> = p.cycles().into_iter().map(|(pts, _)| pts).collect();
        cs.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
        cs
    };
    let ca = sort_cycles(a);
    let cb = sort_cycles(b);
    let mut image = vec![0i64; n];
    for (cycle_a, cycle_b) in ca.iter().zip(&cb) {
        debug_assert_eq!(cycle_a.len(), cycle_b.len());
        for (t, &p) in cycle_a.iter().enumerate() {
            image[p - 1] = cycle_b[t] as i64;
        }
    }
    SignedPermutation::from_images(&image).unwrap()
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::Budget;
    use crate::types::CoxeterType;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn paper_action_example() {
        // (e1 + e2)·(-1 +2 -4) = -e2 + e4
        let sp = SignedPermutation::from_cycles(4, &[vec![-1, 2, -4]]).unwrap();
        assert_eq!(sp.apply(1), (2, true));
        assert_eq!(sp.apply(2), (4, false));
        assert_eq!(sp.apply(4), (1, true));
        assert_eq!(sp.apply(3), (3, false));
    }

    #[test]
    fn composition_is_right_action() {
        // x = (14)(23), y = (15)(26) in Sym(6): 1·(xy) = (1·x)·y = 4
        let x = SignedPermutation::from_cycles(6, &[vec![1, 4], vec![2, 3]]).unwrap();
        let y = SignedPermutation::from_cycles(6, &[vec![1, 5], vec![2, 6]]).unwrap();
        let xy = x.then(&y);
        assert_eq!(xy.apply(1), (4, false));
        assert_eq!(xy.apply(4), (5, false));
    }

    #[test]
    fn cycle_types_and_signs() {
        let id3 = SignedPermutation::identity(3);
        assert_eq!(id3.cycle_type().0, vec![(1, false), (1, false), (1, false)]);
        let flip3 = SignedPermutation::from_cycles(3, &[vec![-3]]).unwrap();
        assert_eq!(flip3.cycle_type().0, vec![(1, true), (1, false), (1, false)]);
        assert!(!flip3.is_positive_element());
        let neg2 = SignedPermutation::from_cycles(3, &[vec![-1, 2]]).unwrap();
        assert_eq!(neg2.cycle_type().0, vec![(2, true), (1, false)]);
    }

    #[test]
    fn one_line_roundtrip() {
        let sp = SignedPermutation::from_cycles(4, &[vec![-1, 2, -4]]).unwrap();
        let line = sp.one_line();
        assert_eq!(line, "-2 +4 +3 -1");
        assert_eq!(SignedPermutation::parse_one_line(&line).unwrap(), sp);
    }

    #[test]
    fn dictionary_is_a_homomorphism() {
        for name in ["A3", "B3", "D4"] {
            let s = sys(name);
            let mut rng = crate::util::SplitMix::new(7);
            for _ in 0..8 {
                let a = from_element(&s.random_element(&mut rng), &s).unwrap();
                let b = from_element(&s.random_element(&mut rng), &s).unwrap();
                let lhs = to_element(&a.then(&b), &s).unwrap();
                let rhs = s.multiply(&to_element(&a, &s).unwrap(), &to_element(&b, &s).unwrap());
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }

    #[test]
    fn roundtrip_exhaustive_on_b3_and_d4() {
        for name in ["B3", "D4"] {
            let s = sys(name);
            let group = crate::conjugacy::enumerate_group(&s, &Budget::default()).unwrap();
            for w in &group {
                let sp = from_element(w, &s).unwrap();
                assert_eq!(&to_element(&sp, &s).unwrap(), w, "{name}");
            }
        }
    }

    #[test]
    fn roundtrip_random_on_b6_and_a5() {
        for name in ["B6", "A5"] {
            let s = sys(name);
            let mut rng = crate::util::SplitMix::new(13);
            for _ in 0..20 {
                let w = s.random_element(&mut rng);
                let sp = from_element(&w, &s).unwrap();
                assert_eq!(to_element(&sp, &s).unwrap(), w, "{name}");
            }
        }
    }

    #[test]
    fn generator_dictionary_matches() {
        // (12), (23), …, (-n) map to the generators in order
        let s = sys("B3");
        let g1 = SignedPermutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let g2 = SignedPermutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        let g3 = SignedPermutation::from_cycles(3, &[vec![-3]]).unwrap();
        assert_eq!(to_element(&g1, &s).unwrap(), s.generator(0));
        assert_eq!(to_element(&g2, &s).unwrap(), s.generator(1));
        assert_eq!(to_element(&g3, &s).unwrap(), s.generator(2));
        // D4: last generator is (-3 -4)
        let d = sys("D4");
        let g4 = SignedPermutation::from_cycles(4, &[vec![-3, -4]]).unwrap();
        assert_eq!(to_element(&g4, &d).unwrap(), d.generator(3));
    }

    #[test]
    fn membership_checks() {
        let s = sys("D4");
        let one_flip = SignedPermutation::from_cycles(4, &[vec![-4]]).unwrap();
        assert!(to_element(&one_flip, &s).is_err());
        let a = sys("A3");
        let signed = SignedPermutation::from_cycles(4, &[vec![-1, 2]]).unwrap();
        assert!(to_element(&signed, &a).is_err());
        let wrong_degree = SignedPermutation::identity(3);
        assert!(to_element(&wrong_degree, &a).is_err());
    }

    #[test]
    fn sign_flip_lengths_in_b3() {
        // With fundamental reflections (12), (23), (-3): the flip on the last
        // coordinate is a generator, the flip on the first has length 5.
        let s = sys("B3");
        let flip3 = to_element(&SignedPermutation::from_cycles(3, &[vec![-3]]).unwrap(), &s).unwrap();
        assert_eq!(s.length(&flip3), 1);
        let flip1 = to_element(&SignedPermutation::from_cycles(3, &[vec![-1]]).unwrap(), &s).unwrap();
        assert_eq!(s.length(&flip1), 5);
        let word = s.reduced_word(&flip1);
        assert_eq!(word, vec![0, 1, 2, 1, 0]);
        assert_eq!(s.element_of_word(&word), flip1);
    }

    #[test]
    fn bicolored_coxeter_in_a3() {
        let s = sys("A3");
        let bc = coxeter_bicolored(&s);
        assert_eq!(bc.part_one, vec![0, 2]);
        assert_eq!(bc.part_two, vec![1]);
        assert!(s.is_involution(&bc.x));
        assert!(s.is_involution(&bc.y));
        assert_eq!(s.length(&bc.x), 2);
        assert_eq!(s.length(&bc.y), 1);
        assert_eq!(s.length(&bc.w), 3);
        assert_eq!(s.fixed_space_dim(&bc.w), 0);
    }

    #[test]
    fn cuspidal_formula_values() {
        let b = |parts: Vec<usize>| CuspidalPartition::new(parts).unwrap();
        assert_eq!(cuspidal_min_length(&b(vec![2, 1]), BdFamily::B).unwrap(), 5);
        assert_eq!(cuspidal_min_length(&b(vec![3, 2]), BdFamily::B).unwrap(), 9);
        assert_eq!(cuspidal_min_length(&b(vec![4]), BdFamily::B).unwrap(), 4);
        assert_eq!(cuspidal_min_length(&b(vec![2, 2]), BdFamily::D).unwrap(), 6);
        assert!(cuspidal_min_length(&b(vec![3, 1]), BdFamily::D).is_ok());
        // D needs an even number of negative cycles
        assert!(cuspidal_min_length(&b(vec![4]), BdFamily::D).is_err());
        assert!(cuspidal_min_length(&b(vec![2, 1, 1]), BdFamily::D).is_err());
    }

    #[test]
    fn construction_matches_spec_example() {
        // B, λ = (3,2): τ = (12)(-3)(-5), σ = (23)(45), ℓ(w) = 9
        let lambda = CuspidalPartition::new(vec![3, 2]).unwrap();
        let mc = construct_min_cuspidal(&lambda, BdFamily::B).unwrap();
        assert!(mc.tau.squares_to_identity());
        assert!(mc.sigma.squares_to_identity());
        assert_eq!(mc.min_length, 9);
        assert_eq!(mc.w.cycle_type().lengths(), vec![3, 2]);
        assert!(mc.w.cycle_type().is_all_negative());
        // verify in the engine
        let s = sys("B5");
        let w = to_element(&mc.w, &s).unwrap();
        let tau = to_element(&mc.tau, &s).unwrap();
        let sigma = to_element(&mc.sigma, &s).unwrap();
        assert_eq!(s.multiply(&tau, &sigma), w);
        assert_eq!(s.length(&w), 9);
        assert_eq!(s.length(&tau) + s.length(&sigma), 9);
        assert_eq!(s.length(&tau), mc.tau_length);
        assert_eq!(s.length(&sigma), mc.sigma_length);
    }

    #[test]
    fn construction_degenerate_small_parts() {
        // λ = (2): τ_i has no 2-cycles, only the flip
        let mc = construct_min_cuspidal(&CuspidalPartition::new(vec![2]).unwrap(), BdFamily::B)
            .unwrap();
        assert_eq!(mc.tau.cycle_string(), "(-2)");
        assert_eq!(mc.sigma.cycle_string(), "(1 2)");
        let mc1 = construct_min_cuspidal(&CuspidalPartition::new(vec![1]).unwrap(), BdFamily::B)
            .unwrap();
        assert_eq!(mc1.tau.cycle_string(), "(-1)");
        assert!(mc1.sigma.is_identity());
    }

    #[test]
    fn bigxs_shapes() {
        let b2 = bigxs(2).unwrap();
        assert!(!b2.degenerate);
        assert_eq!(b2.w1.cycle_string(), "(1 4 6 7)");
        assert_eq!(b2.w2.cycle_string(), "(2 8 5 3)");
        assert_eq!(b2.x.then(&b2.y), b2.w);
        assert!(b2.x.squares_to_identity() && b2.y.squares_to_identity());
        // disjoint supports
        let s1 = b2.w1.support();
        let s2 = b2.w2.support();
        assert!(s1.iter().all(|p| !s2.contains(p)));
        let b3 = bigxs(3).unwrap();
        assert_eq!(b3.w1.cycle_string(), "(1 4 6 8 10 11)");
        assert_eq!(b3.w2.cycle_string(), "(2 12 9 7 5 3)");
        assert_eq!(b3.x.then(&b3.y), b3.w);
        let b1 = bigxs(1).unwrap();
        assert!(b1.degenerate);
        assert_eq!(b1.x.then(&b1.y), b1.w);
    }

    #[test]
    fn sym_centralizer_sizes() {
        let w = bigxs(2).unwrap().w; // two 4-cycles in Sym(8)
        let cent = sym_centralizer(&w, 1_000_000).unwrap();
        assert_eq!(cent.len(), 32);
        for c in &cent {
            assert_eq!(c.inverse().then(&w).then(c), w);
        }
        let w3 = bigxs(3).unwrap().w; // two 6-cycles in Sym(12)
        assert_eq!(sym_centralizer(&w3, 1_000_000).unwrap().len(), 72);
    }

    #[test]
    fn sym_excess_agrees_with_engine_on_a4() {
        let s = sys("A4");
        let mut rng = crate::util::SplitMix::new(19);
        for _ in 0..8 {
            let w = s.random_element(&mut rng);
            let sp = from_element(&w, &s).unwrap();
            let native = sym_excess(&sp, 1_000_000).unwrap();
            assert_eq!(native.length, s.length(&w));
            assert_eq!(native.reflection_length, s.reflection_length(&w));
            let engine = crate::excess::excess_report_for(&s, &w, &Budget::default()).unwrap();
            assert_eq!(native.excess, engine.excess);
            assert_eq!(native.reflection_excess, engine.reflection_excess);
        }
    }
}
