//! Group elements and the operations on them.
//!
//! An [`Element`] is the signed permutation a group element induces on the
//! positive roots: byte `j` holds the index of the image root in the low
//! seven bits and the sign in the high bit. This representation is canonical
//! (two elements are equal iff their byte arrays are), products cost
//! O(|Φ⁺|), and an E7 element occupies 63 bytes.
//!
//! Composition convention, fixed once for the whole engine: elements act on
//! the reflection module on the left, and `multiply(a, b)` is the element
//! acting as `v ↦ a·(b·v)`. A word `[i₁, i₂, …, iₗ]` therefore evaluates to
//! the group product r_{i₁} r_{i₂} ⋯ r_{iₗ}. Concrete permutation models,
//! which traditionally act on the right, are bridged in the signed
//! permutation module through an inversion so that products correspond.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::system::{dihedral_angle_of_local, dihedral_local_of_angle, CoxeterSystem, Model};
use crate::util::SplitMix;
use std::fmt;

const SIGN_BIT: u8 = 0x80;
const INDEX_MASK: u8 = 0x7f;

/// A group element, stored as the signed permutation of Φ⁺.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Box<[u8]>);

impl Element {
    pub(crate) fn pack(index: usize, negated: bool) -> u8 {
        debug_assert!(index <= INDEX_MASK as usize);
        index as u8 | if negated { SIGN_BIT } else { 0 }
    }

    pub(crate) fn from_raw(raw: Vec<u8>) -> Element {
        Element(raw.into_boxed_slice())
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.0
    }

    /// Image of positive root `j`: (target root index, negated).
    pub fn lookup(&self, j: usize) -> (usize, bool) {
        let b = self.0[j];
        ((b & INDEX_MASK) as usize, b & SIGN_BIT != 0)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// |N(w)|: the number of positive roots sent negative.
    pub fn negated_count(&self) -> usize {
        self.0.iter().filter(|&&b| b & SIGN_BIT != 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &b)| b == j as u8)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[")?;
        for (j, &b) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", if b & SIGN_BIT != 0 { "-" } else { "" }, b & INDEX_MASK)?;
        }
        write!(f, "]")
    }
}

/// Classification of an element of a combinatorial dihedral factor I2(m).
///
/// A rotation by `2t` angle slots, or the reflection `a ↦ c - a` in the
/// doubled-angle indexing (so `c ≡ m (mod 2)`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum DihedralTag {
    Rotation(usize),
    Reflection(usize),
}

impl CoxeterSystem {
    pub fn identity(&self) -> Element {
        Element::from_raw((0..self.n_positive_roots()).map(|j| j as u8).collect())
    }

    /// The simple reflection with the given generator index.
    pub fn generator(&self, i: usize) -> Element {
        self.gen_tables[i].clone()
    }

    /// Group product: `multiply(a, b)` acts as a∘b on the reflection module.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let n = self.n_positive_roots();
        assert!(a.degree() == n && b.degree() == n, "elements of different systems");
        let mut out = vec![0u8; n];
        for (j, slot) in out.iter_mut().enumerate() {
            let bj = b.0[j];
            let aj = a.0[(bj & INDEX_MASK) as usize];
            *slot = aj ^ (bj & SIGN_BIT);
        }
        Element::from_raw(out)
    }

    pub fn inverse(&self, a: &Element) -> Element {
        let n = self.n_positive_roots();
        assert_eq!(a.degree(), n, "element of a different system");
        let mut out = vec![0u8; n];
        for j in 0..n {
            let b = a.0[j];
            out[(b & INDEX_MASK) as usize] = j as u8 | (b & SIGN_BIT);
        }
        Element::from_raw(out)
    }

    /// Conjugate `g⁻¹ w g`.
    pub fn conjugate(&self, w: &Element, g: &Element) -> Element {
        self.multiply(&self.multiply(&self.inverse(g), w), g)
    }

    /// Evaluate a word of 0-based generator indices, left to right.
    pub fn element_of_word(&self, word: &[u8]) -> Element {
        let mut acc = self.identity();
        for &i in word {
            acc = self.multiply(&acc, &self.gen_tables[i as usize]);
        }
        acc
    }

    /// N(w): indices of the positive roots sent negative by w.
    pub fn inversion_set(&self, w: &Element) -> Vec<usize> {
        (0..self.n_positive_roots()).filter(|&j| w.lookup(j).1).collect()
    }

    /// ℓ(w) = |N(w)|.
    pub fn length(&self, w: &Element) -> usize {
        w.negated_count()
    }

    /// A reduced word for w, peeling the smallest right descent each step.
    pub fn reduced_word(&self, w: &Element) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w.clone();
        loop {
            let Some(g) = (0..self.rank()).find(|&g| cur.lookup(g).1) else {
                break;
            };
            cur = self.multiply(&cur, &self.gen_tables[g]);
            word.push(g as u8);
        }
        debug_assert!(cur.is_identity());
        word.reverse();
        word
    }

    /// The longest element w₀, found by ascending through any non-inversion.
    pub fn longest_element(&self) -> Element {
        let mut w = self.identity();
        loop {
            let Some(g) = (0..self.rank()).find(|&g| !w.lookup(g).1) else {
                return w;
            };
            w = self.multiply(&w, &self.gen_tables[g]);
        }
    }

    /// True for elements of order exactly 2. The identity is not an
    /// involution, although it satisfies x² = 1.
    pub fn is_involution(&self, w: &Element) -> bool {
        !w.is_identity() && self.multiply(w, w).is_identity()
    }

    /// x² = 1, i.e. involution or identity.
    pub fn squares_to_identity(&self, w: &Element) -> bool {
        self.multiply(w, w).is_identity()
    }

    pub fn order_of(&self, w: &Element) -> usize {
        let mut k = 1;
        let mut cur = w.clone();
        while !cur.is_identity() {
            cur = self.multiply(&cur, w);
            k += 1;
            assert!(k <= 1000, "element order overflow");
        }
        k
    }

    /// The matrix of w on the basis of simple roots, when every factor has
    /// coordinates; `None` when a dihedral factor I2(m), m ≥ 7, is present.
    pub fn matrix_of(&self, w: &Element) -> Option<Matrix> {
        let rank = self.rank();
        let mut m = Matrix::zero(rank, rank);
        for ci in 0..self.components.len() {
            let fm = self.factor_matrix(w, ci)?;
            let off = self.components[ci].gen_offset;
            for i in 0..fm.rows() {
                for j in 0..fm.cols() {
                    m[(off + i, off + j)] = fm[(i, j)].clone();
                }
            }
        }
        Some(m)
    }

    /// The matrix of w's component in one factor, on that factor's simple roots.
    pub fn factor_matrix(&self, w: &Element, ci: usize) -> Option<Matrix> {
        let comp = &self.components[ci];
        let Model::Coords(cm) = &comp.model else { return None };
        let k = comp.gen_count;
        let mut m = Matrix::zero(k, k);
        for i in 0..k {
            let (target, neg) = w.lookup(comp.root_global[i]);
            let (cj, lj) = self.root_home[target];
            debug_assert_eq!(cj, ci, "w does not preserve the factor root set");
            let col: Vec<Scalar> = cm.roots[lj]
                .iter()
                .map(|x| if neg { -x } else { x.clone() })
                .collect();
            m.set_column(i, &col);
        }
        Some(m)
    }

    /// Classify the action of w on a dihedral factor.
    pub(crate) fn dihedral_tag(&self, w: &Element, ci: usize) -> DihedralTag {
        let comp = &self.components[ci];
        let Model::Dihedral { m } = comp.model else {
            panic!("not a dihedral factor");
        };
        // Full-angle image: F(a) in 0..2m, with +m meaning the negative root.
        let full = |a: usize| -> usize {
            let l = dihedral_local_of_angle(a, m);
            let (target, neg) = w.lookup(comp.root_global[l]);
            let (cj, lj) = self.root_home[target];
            debug_assert_eq!(cj, ci);
            dihedral_angle_of_local(lj, m) + if neg { m } else { 0 }
        };
        let f0 = full(0);
        if (1..m).all(|a| full(a) == (a + f0) % (2 * m)) {
            debug_assert_eq!(f0 % 2, 0, "rotations shift by an even count");
            DihedralTag::Rotation(f0 / 2)
        } else {
            let c = f0;
            debug_assert!((1..m).all(|a| full(a) == (c + 2 * m - a) % (2 * m)));
            DihedralTag::Reflection(c)
        }
    }

    /// (dim V₁, dim V₋₁) of w's component in factor `ci`.
    pub(crate) fn factor_eigen_dims(&self, w: &Element, ci: usize) -> (usize, usize) {
        let comp = &self.components[ci];
        match &comp.model {
            Model::Coords(_) => {
                let m = self.factor_matrix(w, ci).unwrap();
                let k = comp.gen_count;
                let fixed = k - m.plus_scaled_identity(&Scalar::from_int(-1)).rank();
                let minus = k - m.plus_scaled_identity(&Scalar::one()).rank();
                (fixed, minus)
            }
            Model::Dihedral { m } => match self.dihedral_tag(w, ci) {
                DihedralTag::Rotation(0) => (2, 0),
                DihedralTag::Rotation(t) => {
                    if m % 2 == 0 && 2 * t == *m {
                        (0, 2)
                    } else {
                        (0, 0)
                    }
                }
                DihedralTag::Reflection(_) => (1, 1),
            },
        }
    }

    /// dim V₁(w), the fixed space of w on the reflection module.
    pub fn fixed_space_dim(&self, w: &Element) -> usize {
        (0..self.components.len()).map(|ci| self.factor_eigen_dims(w, ci).0).sum()
    }

    /// dim V₋₁(w).
    pub fn minus_one_dim(&self, w: &Element) -> usize {
        (0..self.components.len()).map(|ci| self.factor_eigen_dims(w, ci).1).sum()
    }

    /// Reflection length L(w) = rank - dim V₁(w).
    pub fn reflection_length(&self, w: &Element) -> usize {
        self.rank() - self.fixed_space_dim(w)
    }

    /// An element is cuspidal iff it lies in no proper parabolic subgroup,
    /// equivalently iff its fixed space on the reflection module is trivial.
    pub fn is_cuspidal_element(&self, w: &Element) -> bool {
        self.fixed_space_dim(w) == 0
    }

    /// The component of w in one direct factor, embedded back in the product
    /// (identity on every other factor). The product over all factors
    /// reassembles w.
    pub fn project_to_factor(&self, w: &Element, ci: usize) -> Result<Element> {
        if ci >= self.components.len() {
            return Err(Error::InvalidComponent { index: ci, count: self.components.len() });
        }
        let mut raw: Vec<u8> = self.identity().0.into();
        for &g in &self.components[ci].root_global {
            raw[g] = w.0[g];
        }
        Ok(Element::from_raw(raw))
    }

    /// Haphazard element for randomized identities: evaluates a random word.
    pub fn random_element(&self, rng: &mut SplitMix) -> Element {
        let len = 2 * self.n_positive_roots() + 4;
        let mut acc = self.identity();
        for _ in 0..len {
            let g = (rng.next_u64() % self.rank() as u64) as usize;
            acc = self.multiply(&acc, &self.gen_tables[g]);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::CoxeterType;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn generators_are_involutions() {
        for name in ["A2", "B3", "H3", "I2(7)"] {
            let s = sys(name);
            for g in 0..s.rank() {
                let r = s.generator(g);
                assert!(s.multiply(&r, &r).is_identity(), "{name} gen {g}");
                assert_eq!(s.length(&r), 1);
                assert_eq!(s.inversion_set(&r), vec![g]);
                assert_eq!(s.reduced_word(&r), vec![g as u8]);
            }
        }
    }

    #[test]
    fn braid_relation_orders() {
        // (r s)^m = 1 with m the bond order
        for (name, i, j) in [("A2", 0, 1), ("B2", 0, 1), ("I2(5)", 0, 1), ("I2(7)", 0, 1), ("H3", 0, 1)] {
            let s = sys(name);
            let rs = s.multiply(&s.generator(i), &s.generator(j));
            assert_eq!(s.order_of(&rs), s.bond(i, j), "{name}");
        }
    }

    #[test]
    fn inverse_of_product() {
        let s = sys("A2");
        let r1 = s.generator(0);
        let r2 = s.generator(1);
        let w = s.multiply(&r1, &r2);
        assert_eq!(s.inverse(&w), s.multiply(&r2, &r1));
        assert_eq!(s.multiply(&w, &s.inverse(&w)), s.identity());
    }

    #[test]
    fn identity_properties() {
        let s = sys("B3");
        let id = s.identity();
        assert_eq!(s.length(&id), 0);
        assert!(s.inversion_set(&id).is_empty());
        assert!(s.reduced_word(&id).is_empty());
        assert!(!s.is_involution(&id));
        assert!(s.squares_to_identity(&id));
        assert_eq!(s.fixed_space_dim(&id), 3);
        assert_eq!(s.minus_one_dim(&id), 0);
        assert_eq!(s.reflection_length(&id), 0);
    }

    #[test]
    fn longest_element_inverts_all_roots() {
        for name in ["A2", "A3", "B3", "H3", "F4", "I2(7)", "I2(8)", "A2xB2"] {
            let s = sys(name);
            let w0 = s.longest_element();
            assert_eq!(s.length(&w0), s.n_positive_roots(), "{name}");
            assert!(s.squares_to_identity(&w0), "{name}: w0 is an involution");
        }
        // w0(A2) = r1 r2 r1
        let a2 = sys("A2");
        let w0 = a2.element_of_word(&[0, 1, 0]);
        assert_eq!(w0, a2.longest_element());
        assert_eq!(a2.length(&w0), 3);
    }

    #[test]
    fn coxeter_element_has_trivial_fixed_space() {
        for name in ["A2", "A3", "B3", "D4", "F4", "H3", "I2(7)"] {
            let s = sys(name);
            let word: Vec<u8> = (0..s.rank() as u8).collect();
            let c = s.element_of_word(&word);
            assert_eq!(s.fixed_space_dim(&c), 0, "{name}");
            assert_eq!(s.reflection_length(&c), s.rank(), "{name}");
        }
    }

    #[test]
    fn matrices_multiply_and_have_unit_determinant_signs() {
        let s = sys("A2");
        let r1 = s.generator(0);
        let m1 = s.matrix_of(&r1).unwrap();
        assert_eq!(m1.determinant(), Scalar::from_int(-1));
        // a reflection fixes a hyperplane: rank(M(r) - I) = 1
        assert_eq!(m1.plus_scaled_identity(&Scalar::from_int(-1)).rank(), 1);
        let w = s.multiply(&r1, &s.generator(1));
        let mw = s.matrix_of(&w).unwrap();
        let prod = &m1 * &s.matrix_of(&s.generator(1)).unwrap();
        assert_eq!(mw, prod);
        // Coxeter element of A2 fixes nothing
        assert!(mw.plus_scaled_identity(&Scalar::from_int(-1)).kernel_basis().is_empty());
    }

    #[test]
    fn fixed_word_lengths() {
        // the word 312 in H3 is reduced of length 3
        let h3 = sys("H3");
        let w = h3.element_of_word(&[2, 0, 1]);
        assert_eq!(h3.length(&w), 3);
        // the word 1324 in F4 evaluates to a length-4 element
        let f4 = sys("F4");
        let c = f4.element_of_word(&[0, 2, 1, 3]);
        assert_eq!(f4.length(&c), 4);
        assert_eq!(f4.reduced_word(&c).len(), 4);
    }

    #[test]
    fn matrix_respects_bilinear_form() {
        for name in ["B3", "H3", "F4"] {
            let s = sys(name);
            let g = s.bilinear_form().unwrap();
            let mut rng = SplitMix::new(7);
            for _ in 0..5 {
                let w = s.random_element(&mut rng);
                let m = s.matrix_of(&w).unwrap();
                assert_eq!(&(&m.transpose() * &g) * &m, g, "{name}");
            }
        }
    }

    #[test]
    fn w0_in_f4_is_central_minus_one() {
        let s = sys("F4");
        let w0 = s.longest_element();
        assert_eq!(s.length(&w0), 24);
        assert_eq!(s.fixed_space_dim(&w0), 0);
        assert_eq!(s.minus_one_dim(&w0), 4);
    }

    #[test]
    fn dihedral_tags_classify_correctly() {
        let s = sys("I2(8)");
        let id = s.identity();
        assert_eq!(s.dihedral_tag(&id, 0), DihedralTag::Rotation(0));
        let r1 = s.generator(0);
        assert!(matches!(s.dihedral_tag(&r1, 0), DihedralTag::Reflection(_)));
        assert_eq!(s.factor_eigen_dims(&r1, 0), (1, 1));
        let rot = s.multiply(&s.generator(0), &s.generator(1));
        assert!(matches!(s.dihedral_tag(&rot, 0), DihedralTag::Rotation(_)));
        assert_eq!(s.factor_eigen_dims(&rot, 0), (0, 0));
        // half turn in I2(8): (r1 r2)^4 = w0 = -1
        let w0 = s.longest_element();
        assert_eq!(s.factor_eigen_dims(&w0, 0), (0, 2));
        assert_eq!(s.reflection_length(&w0), 2);
    }

    #[test]
    fn projection_reassembles_products() {
        let s = sys("A2xB2");
        let mut rng = SplitMix::new(11);
        for _ in 0..10 {
            let w = s.random_element(&mut rng);
            let p0 = s.project_to_factor(&w, 0).unwrap();
            let p1 = s.project_to_factor(&w, 1).unwrap();
            assert_eq!(s.multiply(&p0, &p1), w);
            assert_eq!(s.length(&w), s.length(&p0) + s.length(&p1));
        }
        assert!(s.project_to_factor(&s.identity(), 2).is_err());
        // (r1 of A2) x (s1 of B2) projected to factor 0 is r1
        let w = s.multiply(&s.generator(0), &s.generator(2));
        assert_eq!(s.project_to_factor(&w, 0).unwrap(), s.generator(0));
    }

    #[test]
    fn length_equals_inverse_length() {
        for name in ["B3", "H3", "I2(7)"] {
            let s = sys(name);
            let mut rng = SplitMix::new(3);
            for _ in 0..20 {
                let w = s.random_element(&mut rng);
                assert_eq!(s.length(&w), s.length(&s.inverse(&w)), "{name}");
            }
        }
    }

    #[test]
    fn reduced_words_are_reduced_and_evaluate_back() {
        for name in ["A3", "B3", "H3", "I2(7)", "A2xB2"] {
            let s = sys(name);
            let mut rng = SplitMix::new(5);
            for _ in 0..20 {
                let w = s.random_element(&mut rng);
                let word = s.reduced_word(&w);
                assert_eq!(word.len(), s.length(&w), "{name}");
                assert_eq!(s.element_of_word(&word), w, "{name}");
            }
        }
    }

    #[test]
    fn reflection_length_bounds() {
        for name in ["A3", "B3", "H3", "I2(7)"] {
            let s = sys(name);
            let mut rng = SplitMix::new(9);
            for _ in 0..20 {
                let w = s.random_element(&mut rng);
                let l = s.reflection_length(&w);
                assert!(l <= s.rank());
                assert_eq!(l == 0, w.is_identity());
            }
        }
    }
}
