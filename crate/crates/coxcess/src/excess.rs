//! Excess, reflection excess and zero-excess certificates.
//!
//! For w in a finite Coxeter group, every factorization w = x·y with
//! x² = y² = 1 corresponds to a reversing element x (x⁻¹wx = w⁻¹ and x² = 1)
//! via y = xw. The engine therefore enumerates the set I_w of such x
//! exhaustively — it is contained in the coset (reverser)·C_W(w) — and reads
//! off
//!
//!   e(w) = min ℓ(x) + ℓ(xw) − ℓ(w)            over x ∈ I_w,
//!   E(w) = the same minimum over J_w ⊆ I_w,
//!
//! where J_w keeps the x whose fixed space contains the fixed space of w;
//! those are exactly the factorizations with L(w) = L(x) + L(y). Reported
//! values are exact minima, never heuristic. Each minimum comes with a
//! certificate (a pair of generator words) that an independent checker can
//! re-verify from scratch.

use crate::conjugacy::{
    centralizer_of_seed, class_of, conjugate_centralizer, enumerate_group, fingerprint, reverser,
    all_classes, Budget, ClassFingerprint, ConjugacyClass,
};
use crate::element::{DihedralTag, Element};
use crate::error::{Error, Result};
use crate::linalg::intersection_dim;
use crate::scalar::Scalar;
use crate::system::{CoxeterSystem, Model};
use crate::util::par_map;

/// The set I_w of involutions (and, when w² = 1, the identity) reversing w.
pub struct ReverserInvolutions {
    pub base: Element,
    /// All members, canonically sorted. Exhaustive.
    pub members: Vec<Element>,
}

/// A witness pair for a factorization w = x·y with x² = y² = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcessCertificate {
    pub x_word: Vec<u8>,
    pub y_word: Vec<u8>,
    /// ℓ(x) + ℓ(y) − ℓ(w), always even and ≥ 0.
    pub defect: usize,
    /// Whether L(w) = L(x) + L(y).
    pub reflection_additive: bool,
}

#[derive(Clone, Debug)]
pub struct ExcessReport {
    pub w: Element,
    pub excess: usize,
    pub reflection_excess: usize,
    pub best_plain: ExcessCertificate,
    pub best_reflective: ExcessCertificate,
    /// |I_w| when the set was enumerated; None when the involution shortcut
    /// (x = 1, y = w) settled the answer without enumeration.
    pub reversing_involutions: Option<usize>,
}

/// Per-class context: the class plus the centralizer of its BFS seed, from
/// which C_W(w) for every member is a single conjugation away.
pub struct ClassContext<'a> {
    sys: &'a CoxeterSystem,
    class: &'a ConjugacyClass,
    seed_centralizer: Option<Vec<Element>>,
    /// Centralizer was over budget but the group is small: fall back to
    /// scanning the whole group for reversing involutions.
    scan_fallback: bool,
}

/// Groups up to this order admit the whole-group scan fallback when a
/// centralizer enumeration is refused by the budget.
const SCAN_FALLBACK_ORDER: u64 = 10_000;

impl<'a> ClassContext<'a> {
    pub fn new(
        sys: &'a CoxeterSystem,
        class: &'a ConjugacyClass,
        budget: &Budget,
    ) -> Result<Self> {
        // Classes of involutions (and of the identity) never need coset
        // enumeration: the shortcut below answers for every member. This also
        // sidesteps the huge centralizers of central elements.
        if sys.squares_to_identity(class.representative()) {
            return Ok(ClassContext { sys, class, seed_centralizer: None, scan_fallback: false });
        }
        match centralizer_of_seed(sys, class, budget) {
            Ok(c) => {
                Ok(ClassContext { sys, class, seed_centralizer: Some(c), scan_fallback: false })
            }
            Err(Error::BudgetExceeded { .. }) if sys.group_order() <= SCAN_FALLBACK_ORDER => {
                Ok(ClassContext { sys, class, seed_centralizer: None, scan_fallback: true })
            }
            Err(e) => Err(e),
        }
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.sys
    }

    pub fn class(&self) -> &ConjugacyClass {
        self.class
    }

    /// Exhaustive I_w for a member of the class.
    pub fn reverser_involutions(&self, w: &Element) -> Result<ReverserInvolutions> {
        let sys = self.sys;
        if self.scan_fallback {
            let scan_budget =
                Budget { max_group_order: SCAN_FALLBACK_ORDER, max_class_elements: SCAN_FALLBACK_ORDER };
            let members = reverser_involutions_scan(sys, w, &scan_budget)?;
            return Ok(ReverserInvolutions { base: w.clone(), members });
        }
        let cent = self
            .seed_centralizer
            .as_ref()
            .expect("involution classes take the shortcut");
        let cw = conjugate_centralizer(sys, self.class, w, cent)?;
        let h = reverser(sys, self.class, w)?;
        let mut members: Vec<Element> = cw
            .iter()
            .map(|c| sys.multiply(&h, c))
            .filter(|x| sys.squares_to_identity(x))
            .collect();
        members.sort_unstable();
        if members.is_empty() {
            return Err(Error::Internal(
                "no reversing involution found; finite Coxeter groups are strongly real".into(),
            ));
        }
        Ok(ReverserInvolutions { base: w.clone(), members })
    }

    /// J_w: the members of I_w fixing the fixed space of w pointwise.
    pub fn j_set(&self, w: &Element, iw: &ReverserInvolutions) -> Vec<Element> {
        let fixed = fixed_space_data(self.sys, w);
        iw.members
            .iter()
            .filter(|x| v1_contained(self.sys, &fixed, x))
            .cloned()
            .collect()
    }

    /// Exact e(w), E(w) and attaining certificates.
    pub fn excess_report(&self, w: &Element) -> Result<ExcessReport> {
        let sys = self.sys;
        if sys.squares_to_identity(w) {
            return Ok(trivial_report(sys, w));
        }
        let iw = self.reverser_involutions(w)?;
        let fixed = fixed_space_data(sys, w);
        let lw = sys.length(w);
        let mut best_plain: Option<(usize, ExcessCertificate)> = None;
        let mut best_reflective: Option<(usize, ExcessCertificate)> = None;
        for x in &iw.members {
            let y = sys.multiply(x, w);
            debug_assert!(sys.squares_to_identity(&y));
            let sum = sys.length(x) + sys.length(&y);
            let in_j = v1_contained(sys, &fixed, x);
            let better_plain = best_plain.as_ref().map_or(true, |(s, _)| sum < *s);
            let better_refl = in_j && best_reflective.as_ref().map_or(true, |(s, _)| sum < *s);
            if better_plain || better_refl {
                let cert = self.certificate(w, x, &y, sum - lw);
                if better_plain {
                    best_plain = Some((sum, cert.clone()));
                }
                if better_refl {
                    best_reflective = Some((sum, cert));
                }
            }
        }
        let (plain_sum, best_plain) = best_plain.expect("I_w nonempty");
        let Some((refl_sum, best_reflective)) = best_reflective else {
            return Err(Error::Internal(
                "J_w empty: every w admits a reflection-additive factorization".into(),
            ));
        };
        debug_assert!(best_reflective.reflection_additive);
        let excess = plain_sum - lw;
        let reflection_excess = refl_sum - lw;
        debug_assert!(excess % 2 == 0 && reflection_excess % 2 == 0);
        debug_assert!(reflection_excess >= excess);
        Ok(ExcessReport {
            w: w.clone(),
            excess,
            reflection_excess,
            best_plain,
            best_reflective,
            reversing_involutions: Some(iw.members.len()),
        })
    }

    fn certificate(&self, w: &Element, x: &Element, y: &Element, defect: usize) -> ExcessCertificate {
        let sys = self.sys;
        let additive =
            sys.reflection_length(x) + sys.reflection_length(y) == sys.reflection_length(w);
        ExcessCertificate {
            x_word: sys.reduced_word(x),
            y_word: sys.reduced_word(y),
            defect,
            reflection_additive: additive,
        }
    }

    /// X⁰_min: the minimal-length members with e = E = 0, each with its
    /// certificate, in canonical order.
    pub fn x0_min(&self, threads: usize) -> Result<X0Report> {
        let xmin = self.class.min_length_elements();
        let reports = par_map(&xmin, threads, |w| self.excess_report(w));
        let mut members = Vec::new();
        for r in reports {
            let r = r?;
            if r.excess == 0 && r.reflection_excess == 0 {
                members.push(r);
            }
        }
        Ok(X0Report { x_min_count: xmin.len(), members })
    }
}

/// Result of an X⁰_min extraction for one class.
pub struct X0Report {
    pub x_min_count: usize,
    /// Reports for the members of X⁰_min, canonically ordered.
    pub members: Vec<ExcessReport>,
}

fn trivial_report(sys: &CoxeterSystem, w: &Element) -> ExcessReport {
    // x = 1, y = w: lengths add trivially and V₋₁(1) = 0, so this is a
    // reflection-additive zero-defect factorization.
    let cert = ExcessCertificate {
        x_word: Vec::new(),
        y_word: sys.reduced_word(w),
        defect: 0,
        reflection_additive: true,
    };
    ExcessReport {
        w: w.clone(),
        excess: 0,
        reflection_excess: 0,
        best_plain: cert.clone(),
        best_reflective: cert,
        reversing_involutions: None,
    }
}

/// Convenience: the excess report of a single element (class computed here).
pub fn excess_report_for(sys: &CoxeterSystem, w: &Element, budget: &Budget) -> Result<ExcessReport> {
    if sys.squares_to_identity(w) {
        return Ok(trivial_report(sys, w));
    }
    let class = class_of(sys, w, budget)?;
    let ctx = ClassContext::new(sys, &class, budget)?;
    ctx.excess_report(w)
}

/// Whole-group fallback for I_w, usable when the group itself is small.
/// Serves as an independent oracle for the coset-based enumeration.
pub fn reverser_involutions_scan(
    sys: &CoxeterSystem,
    w: &Element,
    budget: &Budget,
) -> Result<Vec<Element>> {
    let winv = sys.inverse(w);
    let group = enumerate_group(sys, budget)?;
    Ok(group
        .into_iter()
        .filter(|x| sys.squares_to_identity(x) && sys.conjugate(w, x) == winv)
        .collect())
}

/// Fixed-space description of w, factor by factor.
enum FactorFixed {
    /// Basis of V₁ of the factor matrix.
    Coords(Vec<Vec<Scalar>>),
    Dihedral(DihedralTag),
}

fn fixed_space_data(sys: &CoxeterSystem, w: &Element) -> Vec<FactorFixed> {
    (0..sys.component_count())
        .map(|ci| match &sys.component(ci).model {
            Model::Coords(_) => {
                let m = sys.factor_matrix(w, ci).unwrap();
                FactorFixed::Coords(m.plus_scaled_identity(&Scalar::from_int(-1)).kernel_basis())
            }
            Model::Dihedral { .. } => FactorFixed::Dihedral(sys.dihedral_tag(w, ci)),
        })
        .collect()
}

/// V₁(w) ⊆ V₁(x), checked factor by factor.
fn v1_contained(sys: &CoxeterSystem, w_fixed: &[FactorFixed], x: &Element) -> bool {
    w_fixed.iter().enumerate().all(|(ci, fx)| match fx {
        FactorFixed::Coords(basis) => {
            if basis.is_empty() {
                return true;
            }
            let mx = sys.factor_matrix(x, ci).unwrap();
            basis.iter().all(|v| &mx.apply(v) == v)
        }
        FactorFixed::Dihedral(wtag) => {
            let xtag = sys.dihedral_tag(x, ci);
            match wtag {
                // V₁(w) = 0: nothing to contain
                DihedralTag::Rotation(t) if *t != 0 => true,
                // w = 1 on this factor: x must fix the whole plane
                DihedralTag::Rotation(_) => xtag == DihedralTag::Rotation(0),
                // w a reflection: only 1 and w itself fix its axis pointwise
                DihedralTag::Reflection(c) => {
                    xtag == DihedralTag::Rotation(0) || xtag == DihedralTag::Reflection(*c)
                }
            }
        }
    })
}

/// dim(V₋₁(x) ∩ V₋₁(y)), factor by factor. Exposed for the three-way
/// equivalence checks.
pub fn minus_one_intersection_dim(sys: &CoxeterSystem, x: &Element, y: &Element) -> usize {
    (0..sys.component_count())
        .map(|ci| match &sys.component(ci).model {
            Model::Coords(_) => {
                let kx = sys
                    .factor_matrix(x, ci)
                    .unwrap()
                    .plus_scaled_identity(&Scalar::one())
                    .kernel_basis();
                let ky = sys
                    .factor_matrix(y, ci)
                    .unwrap()
                    .plus_scaled_identity(&Scalar::one())
                    .kernel_basis();
                intersection_dim(&kx, &ky, sys.component(ci).gen_count)
            }
            Model::Dihedral { m } => {
                let dim = |tag: DihedralTag| match tag {
                    DihedralTag::Rotation(t) => {
                        if m % 2 == 0 && 2 * t == *m {
                            2
                        } else {
                            0
                        }
                    }
                    DihedralTag::Reflection(_) => 1,
                };
                let (tx, ty) = (sys.dihedral_tag(x, ci), sys.dihedral_tag(y, ci));
                let (dx, dy) = (dim(tx), dim(ty));
                if dx == 0 || dy == 0 {
                    0
                } else if dx == 2 {
                    dy
                } else if dy == 2 {
                    dx
                } else {
                    // two reflections share their (-1)-line iff they are equal
                    usize::from(tx == ty)
                }
            }
        })
        .sum()
}

/// Independent certificate checker: re-derives every claim from the words.
pub fn validate_certificate(
    sys: &CoxeterSystem,
    w: &Element,
    cert: &ExcessCertificate,
) -> std::result::Result<(), Vec<String>> {
    let mut problems = Vec::new();
    let x = sys.element_of_word(&cert.x_word);
    let y = sys.element_of_word(&cert.y_word);
    if !sys.squares_to_identity(&x) {
        problems.push("x² ≠ 1".to_string());
    }
    if !sys.squares_to_identity(&y) {
        problems.push("y² ≠ 1".to_string());
    }
    if sys.multiply(&x, &y) != *w {
        problems.push("x·y ≠ w".to_string());
    }
    let defect = (sys.length(&x) + sys.length(&y)).wrapping_sub(sys.length(w));
    if defect != cert.defect {
        problems.push(format!("defect is {defect}, certificate claims {}", cert.defect));
    }
    if cert.defect % 2 != 0 {
        problems.push("defect is odd".to_string());
    }
    let additive =
        sys.reflection_length(&x) + sys.reflection_length(&y) == sys.reflection_length(w);
    if additive != cert.reflection_additive {
        problems.push(format!(
            "reflection additivity is {additive}, certificate claims {}",
            cert.reflection_additive
        ));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

/// One row of a whole-group theorem verification.
pub struct TheoremRow {
    pub fingerprint: ClassFingerprint,
    pub size: usize,
    pub l_min: usize,
    pub x_min_count: usize,
    pub cuspidal: bool,
    /// A minimal-length member with e = E = 0, with its certificate.
    pub witness: Option<(Element, ExcessCertificate)>,
}

pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
    pub class_count: usize,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.witness.is_some())
    }
}

/// For every conjugacy class, find a minimal-length element with
/// e = E = 0. A class without one would falsify the engine, not the
/// mathematics; it is reported rather than panicking.
pub fn verify_theorem(sys: &CoxeterSystem, budget: &Budget, threads: usize) -> Result<TheoremReport> {
    let classes = all_classes(sys, budget)?;
    let mut rows = Vec::with_capacity(classes.len());
    for class in &classes {
        let ctx = ClassContext::new(sys, class, budget)?;
        let xmin = class.min_length_elements();
        let reports = par_map(&xmin, threads, |w| ctx.excess_report(w));
        let mut witness = None;
        for r in reports {
            let r = r?;
            if r.excess == 0 && r.reflection_excess == 0 {
                witness = Some((r.w.clone(), r.best_reflective.clone()));
                break;
            }
        }
        rows.push(TheoremRow {
            fingerprint: fingerprint(sys, class),
            size: class.size(),
            l_min: class.l_min(),
            x_min_count: class.x_min_count(),
            cuspidal: sys.is_cuspidal_element(class.representative()),
            witness,
        });
    }
    Ok(TheoremReport { class_count: rows.len(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::CoxeterType;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    fn report(sys_: &CoxeterSystem, w: &Element) -> ExcessReport {
        excess_report_for(sys_, w, &Budget::default()).unwrap()
    }

    #[test]
    fn involutions_have_zero_excess() {
        let s = sys("B3");
        for g in 0..s.rank() {
            let r = report(&s, &s.generator(g));
            assert_eq!((r.excess, r.reflection_excess), (0, 0));
        }
        let w0 = s.longest_element();
        let r = report(&s, &w0);
        assert_eq!((r.excess, r.reflection_excess), (0, 0));
        assert!(validate_certificate(&s, &w0, &r.best_reflective).is_ok());
    }

    #[test]
    fn coxeter_element_of_a2_reversed_by_reflections() {
        let s = sys("A2");
        let w = s.multiply(&s.generator(0), &s.generator(1));
        let class = class_of(&s, &w, &Budget::default()).unwrap();
        let ctx = ClassContext::new(&s, &class, &Budget::default()).unwrap();
        let iw = ctx.reverser_involutions(&w).unwrap();
        // I_w = the three reflections of Sym(3)
        assert_eq!(iw.members.len(), 3);
        for x in &iw.members {
            assert!(s.is_involution(x));
            assert_eq!(s.conjugate(&w, x), s.inverse(&w));
        }
        let r = ctx.excess_report(&w).unwrap();
        assert_eq!((r.excess, r.reflection_excess), (0, 0));
    }

    #[test]
    fn identity_reversers_are_all_involutions_and_identity() {
        let s = sys("A2");
        let id = s.identity();
        let scan = reverser_involutions_scan(&s, &id, &Budget::default()).unwrap();
        // 3 reflections + w0? In Sym(3): involutions are the 3 transpositions;
        // plus the identity itself.
        assert_eq!(scan.len(), 4);
    }

    #[test]
    fn coset_and_scan_routes_agree() {
        for name in ["A3", "B3", "I2(7)"] {
            let s = sys(name);
            let mut rng = crate::util::SplitMix::new(31);
            for _ in 0..6 {
                let w = s.random_element(&mut rng);
                if s.squares_to_identity(&w) {
                    continue;
                }
                let class = class_of(&s, &w, &Budget::default()).unwrap();
                let ctx = ClassContext::new(&s, &class, &Budget::default()).unwrap();
                let coset = ctx.reverser_involutions(&w).unwrap().members;
                let scan = reverser_involutions_scan(&s, &w, &Budget::default()).unwrap();
                assert_eq!(coset, scan, "{name}");
            }
        }
    }

    #[test]
    fn excesses_are_even_nonnegative_and_ordered() {
        for name in ["A3", "B3", "H3", "I2(5)", "I2(8)"] {
            let s = sys(name);
            let mut rng = crate::util::SplitMix::new(41);
            for _ in 0..10 {
                let w = s.random_element(&mut rng);
                let r = report(&s, &w);
                assert_eq!(r.excess % 2, 0, "{name}");
                assert_eq!(r.reflection_excess % 2, 0, "{name}");
                assert!(r.reflection_excess >= r.excess, "{name}");
                assert!(validate_certificate(&s, &w, &r.best_plain).is_ok());
                assert!(validate_certificate(&s, &w, &r.best_reflective).is_ok());
                assert!(r.best_reflective.reflection_additive);
            }
        }
    }

    #[test]
    fn symmetric_parameterization_gives_same_minimum() {
        // min over x ∈ I_w of ℓ(x) + ℓ(xw) equals min over y ∈ I_w of
        // ℓ(wy) + ℓ(y), because inversion maps one factorization set onto
        // the other.
        let s = sys("B3");
        let mut rng = crate::util::SplitMix::new(43);
        for _ in 0..8 {
            let w = s.random_element(&mut rng);
            if s.squares_to_identity(&w) {
                continue;
            }
            let class = class_of(&s, &w, &Budget::default()).unwrap();
            let ctx = ClassContext::new(&s, &class, &Budget::default()).unwrap();
            let iw = ctx.reverser_involutions(&w).unwrap();
            let via_x: usize =
                iw.members.iter().map(|x| s.length(x) + s.length(&s.multiply(x, &w))).min().unwrap();
            let via_y: usize =
                iw.members.iter().map(|y| s.length(&s.multiply(&w, y)) + s.length(y)).min().unwrap();
            assert_eq!(via_x, via_y);
        }
    }

    #[test]
    fn j_set_matches_reflection_additivity() {
        for name in ["B3", "I2(8)", "A2xB2"] {
            let s = sys(name);
            let mut rng = crate::util::SplitMix::new(47);
            for _ in 0..6 {
                let w = s.random_element(&mut rng);
                if s.squares_to_identity(&w) {
                    continue;
                }
                let class = class_of(&s, &w, &Budget::default()).unwrap();
                let ctx = ClassContext::new(&s, &class, &Budget::default()).unwrap();
                let iw = ctx.reverser_involutions(&w).unwrap();
                let j = ctx.j_set(&w, &iw);
                assert!(!j.is_empty(), "{name}: J_w must be nonempty");
                for x in &iw.members {
                    let y = s.multiply(x, &w);
                    let additive = s.reflection_length(x) + s.reflection_length(&y)
                        == s.reflection_length(&w);
                    let in_j = j.binary_search(x).is_ok();
                    assert_eq!(in_j, additive, "{name}");
                    let trivial_meet = minus_one_intersection_dim(&s, x, &y) == 0;
                    assert_eq!(in_j, trivial_meet, "{name}");
                }
            }
        }
    }

    #[test]
    fn centralizer_budget_falls_back_to_group_scan() {
        let s = sys("A3");
        let w = s.multiply(&s.generator(0), &s.generator(1)); // order 3, not an involution
        let class = class_of(&s, &w, &Budget::default()).unwrap();
        let starved = Budget { max_group_order: 1_000_000, max_class_elements: 1 };
        let ctx = ClassContext::new(&s, &class, &starved).unwrap();
        let via_scan = ctx.reverser_involutions(&w).unwrap().members;
        let direct = reverser_involutions_scan(&s, &w, &Budget::default()).unwrap();
        assert_eq!(via_scan, direct);
        let r = ctx.excess_report(&w).unwrap();
        assert_eq!((r.excess, r.reflection_excess), (0, 0));
    }

    #[test]
    fn identity_j_set_is_the_identity_alone() {
        // V₁(1) = V forces x = 1
        let s = sys("A3");
        let id = s.identity();
        let members = reverser_involutions_scan(&s, &id, &Budget::default()).unwrap();
        assert!(members.len() > 1);
        let class = class_of(&s, &id, &Budget::default()).unwrap();
        let ctx = ClassContext::new(&s, &class, &Budget::default()).unwrap();
        let iw = ReverserInvolutions { base: id.clone(), members };
        let j = ctx.j_set(&id, &iw);
        assert_eq!(j, vec![id]);
    }

    #[test]
    fn cuspidal_elements_have_j_equal_i_and_equal_excesses() {
        let s = sys("F4");
        let classes = all_classes(&s, &Budget::default()).unwrap();
        for class in classes.iter().filter(|c| s.is_cuspidal_element(c.representative())) {
            let rep = class.representative();
            if s.squares_to_identity(rep) {
                continue;
            }
            let ctx = ClassContext::new(&s, class, &Budget::default()).unwrap();
            let iw = ctx.reverser_involutions(rep).unwrap();
            assert_eq!(ctx.j_set(rep, &iw), iw.members);
            let r = ctx.excess_report(rep).unwrap();
            assert_eq!(r.excess, r.reflection_excess);
        }
    }

    #[test]
    fn h3_class_six_representative_has_zero_excess() {
        let s = sys("H3");
        let w = s.element_of_word(&[2, 0, 1]); // the word 312
        let r = report(&s, &w);
        assert_eq!(s.length(&w), 3);
        assert_eq!((r.excess, r.reflection_excess), (0, 0));
    }

    #[test]
    fn theorem_holds_on_small_groups() {
        for name in ["A2", "B2", "I2(7)", "A1"] {
            let s = sys(name);
            let report = verify_theorem(&s, &Budget::default(), 1).unwrap();
            assert!(report.all_pass(), "{name}");
            for row in &report.rows {
                let (w, cert) = row.witness.as_ref().unwrap();
                assert_eq!(s.length(w), row.l_min);
                assert!(validate_certificate(&s, w, cert).is_ok());
            }
        }
    }

    #[test]
    fn bad_certificates_are_rejected() {
        let s = sys("A2");
        let w = s.multiply(&s.generator(0), &s.generator(1));
        // x = r1, y = r2 is genuine
        let good = ExcessCertificate {
            x_word: vec![0],
            y_word: vec![1],
            defect: 0,
            reflection_additive: true,
        };
        assert!(validate_certificate(&s, &w, &good).is_ok());
        // wrong product
        let bad = ExcessCertificate { x_word: vec![1], y_word: vec![1], ..good.clone() };
        assert!(validate_certificate(&s, &w, &bad).is_err());
        // non-involution factor
        let bad2 = ExcessCertificate { x_word: vec![0, 1], y_word: vec![1, 0, 1], ..good.clone() };
        assert!(validate_certificate(&s, &w, &bad2).is_err());
        // misstated defect
        let bad3 = ExcessCertificate { defect: 2, ..good };
        assert!(validate_certificate(&s, &w, &bad3).is_err());
    }
}
