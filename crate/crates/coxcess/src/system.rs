//! Construction of finite Coxeter systems.
//!
//! A [`CoxeterSystem`] holds everything immutable about a group: the Coxeter
//! matrix, the positive roots Φ⁺ (generated as the closure of the simple
//! roots under the simple reflections), the signed permutation each simple
//! reflection induces on Φ⁺, the bilinear form, and the group order.
//!
//! Positive roots are indexed globally with the simple roots first, so the
//! simple root of generator `i` always has root index `i`. Crystallographic
//! and H-type factors carry exact coordinates in the basis of simple roots;
//! dihedral factors I2(m) with m ≥ 7 are purely combinatorial (m positive
//! roots indexed by angle slot) because cos(π/m) then leaves Q(√5).

use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::types::{Component, CoxeterType};
use std::collections::HashMap;

/// Largest positive-root count the packed element encoding supports
/// (7 index bits + 1 sign bit per root).
pub const MAX_POSITIVE_ROOTS: usize = 127;

pub struct CoxeterSystem {
    ctype: CoxeterType,
    rank: usize,
    n_positive: usize,
    coxeter_matrix: Vec<Vec<usize>>,
    pub(crate) components: Vec<ComponentData>,
    /// global root index -> (component index, local root index)
    pub(crate) root_home: Vec<(usize, usize)>,
    pub(crate) gen_tables: Vec<Element>,
    group_order: u64,
}

pub(crate) struct ComponentData {
    pub component: Component,
    pub gen_offset: usize,
    pub gen_count: usize,
    /// local root index -> global root index
    pub root_global: Vec<usize>,
    pub model: Model,
}

pub(crate) enum Model {
    Coords(CoordModel),
    Dihedral { m: usize },
}

pub(crate) struct CoordModel {
    /// Gram matrix of the factor's simple roots.
    pub gram: Matrix,
    /// ⟨α_i, α_i⟩ per simple root.
    pub norms: Vec<Scalar>,
    /// local root index -> coordinates in the factor's simple-root basis
    pub roots: Vec<Vec<Scalar>>,
    index: HashMap<Vec<Scalar>, usize>,
}

impl CoordModel {
    /// Look up a vector as a signed positive root: Ok((index, negated)).
    pub fn signed_index(&self, v: &[Scalar]) -> Option<(usize, bool)> {
        if let Some(&i) = self.index.get(v) {
            return Some((i, false));
        }
        let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&i| (i, true))
    }

    fn reflect(&self, gen: usize, v: &[Scalar]) -> Vec<Scalar> {
        // r·v = v - (2⟨α_gen, v⟩ / ⟨α_gen, α_gen⟩)·α_gen
        let mut inner = Scalar::zero();
        for (j, vj) in v.iter().enumerate() {
            inner += &(&self.gram[(gen, j)] * vj);
        }
        let coeff = &(&Scalar::from_int(2) * &inner) / &self.norms[gen];
        let mut out = v.to_vec();
        out[gen] = &out[gen] - &coeff;
        out
    }
}

/// Sign convention for a vector that is known to be ±(positive root):
/// positive iff its first nonzero coordinate is positive.
fn is_positive_root(v: &[Scalar]) -> bool {
    v.iter().find(|x| !x.is_zero()).map(|x| x.is_positive()).unwrap_or(false)
}

fn gram_entry(m: usize, ni: i64, nj: i64) -> Scalar {
    match m {
        2 => Scalar::zero(),
        3 => {
            debug_assert_eq!(ni, nj);
            Scalar::ratio(-ni, 2)
        }
        4 => {
            debug_assert_eq!(ni * nj, 2);
            Scalar::from_int(-1)
        }
        5 => {
            debug_assert_eq!((ni, nj), (2, 2));
            // -2·cos(π/5) = -(1+√5)/2
            -Scalar::golden()
        }
        6 => {
            debug_assert_eq!(ni * nj, 12);
            Scalar::from_int(-3)
        }
        _ => unreachable!("no coordinate model for bond order {m}"),
    }
}

fn build_coord_model(c: Component) -> Result<CoordModel> {
    let k = c.rank();
    let m = c.coxeter_matrix();
    let norms_i: Vec<i64> = c.simple_norms();
    let mut gram = Matrix::zero(k, k);
    for i in 0..k {
        gram[(i, i)] = Scalar::from_int(norms_i[i]);
        for j in i + 1..k {
            let e = gram_entry(m[i][j], norms_i[i], norms_i[j]);
            gram[(i, j)] = e.clone();
            gram[(j, i)] = e;
        }
    }
    let norms: Vec<Scalar> = norms_i.iter().map(|&n| Scalar::from_int(n)).collect();

    let mut model = CoordModel { gram, norms, roots: Vec::new(), index: HashMap::new() };
    for i in 0..k {
        let mut v = vec![Scalar::zero(); k];
        v[i] = Scalar::one();
        model.index.insert(v.clone(), i);
        model.roots.push(v);
    }
    // Closure of Π under the simple reflections, keeping positives. Every
    // positive root arises this way.
    let mut frontier: Vec<usize> = (0..k).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &ri in &frontier {
            for g in 0..k {
                let img = model.reflect(g, &model.roots[ri].clone());
                if is_positive_root(&img) && !model.index.contains_key(&img) {
                    let idx = model.roots.len();
                    if idx >= MAX_POSITIVE_ROOTS + 1 {
                        return Err(Error::Internal(format!("root closure of {c} diverged")));
                    }
                    model.index.insert(img.clone(), idx);
                    model.roots.push(img);
                    next.push(idx);
                }
            }
        }
        frontier = next;
    }
    let expected = c.positive_root_count();
    if model.roots.len() != expected {
        return Err(Error::Internal(format!(
            "{c}: closure found {} positive roots, expected {expected}",
            model.roots.len()
        )));
    }

    // Canonical local order: simple roots first, then by (height, coordinates).
    let mut rest: Vec<Vec<Scalar>> = model.roots[k..].to_vec();
    rest.sort_by_key(|v| {
        let height: Scalar = v.iter().fold(Scalar::zero(), |acc, x| &acc + x);
        (height, v.clone())
    });
    let mut roots = model.roots[..k].to_vec();
    roots.extend(rest);
    let index: HashMap<Vec<Scalar>, usize> =
        roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
    model.roots = roots;
    model.index = index;
    Ok(model)
}

/// Local table of a simple reflection of a coordinate factor:
/// root j ↦ (target, negated).
fn coord_gen_table(model: &CoordModel, gen: usize) -> Vec<(usize, bool)> {
    model
        .roots
        .iter()
        .map(|v| {
            let img = model.reflect(gen, v);
            model.signed_index(&img).expect("reflection left the root system")
        })
        .collect()
}

// Dihedral combinatorial model: positive roots sit at angles jπ/m for
// j = 0..m-1, with α₁ at angle 0 and α₂ at angle m-1. Local indices put the
// two simple roots first: 0 ↔ angle 0, 1 ↔ angle m-1, k ↔ angle k-1 (k ≥ 2).
pub(crate) fn dihedral_angle_of_local(l: usize, m: usize) -> usize {
    match l {
        0 => 0,
        1 => m - 1,
        _ => l - 1,
    }
}

pub(crate) fn dihedral_local_of_angle(a: usize, m: usize) -> usize {
    if a == 0 {
        0
    } else if a == m - 1 {
        1
    } else {
        a + 1
    }
}

fn dihedral_gen_table(m: usize, gen: usize) -> Vec<(usize, bool)> {
    (0..m)
        .map(|l| {
            let a = dihedral_angle_of_local(l, m);
            match gen {
                // s₁ : angle a ↦ angle m - a (a = 0 goes negative)
                0 => {
                    if a == 0 {
                        (0, true)
                    } else {
                        (dihedral_local_of_angle(m - a, m), false)
                    }
                }
                // s₂ : angle a ↦ angle m - 2 - a (a = m-1 goes negative)
                1 => {
                    if a == m - 1 {
                        (1, true)
                    } else {
                        (dihedral_local_of_angle(m - 2 - a, m), false)
                    }
                }
                _ => unreachable!(),
            }
        })
        .collect()
}

impl CoxeterSystem {
    pub fn build(t: &CoxeterType) -> Result<CoxeterSystem> {
        let n_positive = t.positive_root_count();
        if n_positive > MAX_POSITIVE_ROOTS {
            return Err(Error::RootLimit { count: n_positive, limit: MAX_POSITIVE_ROOTS });
        }
        let rank = t.rank();

        // Block-diagonal Coxeter matrix.
        let mut coxeter_matrix = vec![vec![2; rank]; rank];
        for (i, row) in coxeter_matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut gen_component = Vec::with_capacity(rank);
        let mut components = Vec::new();
        let mut gen_offset = 0;
        for (ci, &c) in t.components().iter().enumerate() {
            let k = c.rank();
            let local_m = c.coxeter_matrix();
            for i in 0..k {
                for j in 0..k {
                    coxeter_matrix[gen_offset + i][gen_offset + j] = local_m[i][j];
                }
                gen_component.push(ci);
            }
            let model = if c.has_coordinates() {
                Model::Coords(build_coord_model(c)?)
            } else {
                let Component::I2(m) = c else { unreachable!() };
                Model::Dihedral { m }
            };
            components.push(ComponentData {
                component: c,
                gen_offset,
                gen_count: k,
                root_global: Vec::new(),
                model,
            });
            gen_offset += k;
        }

        // Global root order: all simple roots first (generator order), then the
        // remaining roots of each factor in factor order.
        let mut root_home = vec![(0usize, 0usize); n_positive];
        let mut next_global = rank;
        for (ci, comp) in components.iter_mut().enumerate() {
            let local_count = comp.component.positive_root_count();
            let mut root_global = Vec::with_capacity(local_count);
            for l in 0..local_count {
                let g = if l < comp.gen_count {
                    comp.gen_offset + l
                } else {
                    let g = next_global;
                    next_global += 1;
                    g
                };
                root_home[g] = (ci, l);
                root_global.push(g);
            }
            comp.root_global = root_global;
        }
        debug_assert_eq!(next_global, n_positive);

        // Reflection tables, one global signed permutation per generator.
        let mut gen_tables = Vec::with_capacity(rank);
        for g in 0..rank {
            let ci = gen_component[g];
            let comp = &components[ci];
            let local = match &comp.model {
                Model::Coords(cm) => coord_gen_table(cm, g - comp.gen_offset),
                Model::Dihedral { m } => dihedral_gen_table(*m, g - comp.gen_offset),
            };
            let mut raw = vec![0u8; n_positive];
            for (j, slot) in raw.iter_mut().enumerate() {
                let (cj, lj) = root_home[j];
                *slot = if cj == ci {
                    let (target, neg) = local[lj];
                    Element::pack(comp.root_global[target], neg)
                } else {
                    Element::pack(j, false)
                };
            }
            let table = Element::from_raw(raw);
            debug_assert_eq!(
                table.negated_count(),
                1,
                "a simple reflection must negate exactly its own root"
            );
            gen_tables.push(table);
        }

        Ok(CoxeterSystem {
            ctype: t.clone(),
            rank,
            n_positive,
            coxeter_matrix,
            components,
            root_home,
            gen_tables,
            group_order: t.group_order(),
        })
    }

    pub fn coxeter_type(&self) -> &CoxeterType {
        &self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n_positive_roots(&self) -> usize {
        self.n_positive
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn is_irreducible(&self) -> bool {
        self.ctype.is_irreducible()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn coxeter_matrix(&self) -> &Vec<Vec<usize>> {
        &self.coxeter_matrix
    }

    /// Bond order m_rs between two generators.
    pub fn bond(&self, r: usize, s: usize) -> usize {
        self.coxeter_matrix[r][s]
    }

    /// The global Gram matrix of the simple roots, when every factor has
    /// coordinates. Dihedral factors with m ≥ 7 have none.
    pub fn bilinear_form(&self) -> Option<Matrix> {
        let mut g = Matrix::zero(self.rank, self.rank);
        for comp in &self.components {
            let Model::Coords(cm) = &comp.model else { return None };
            for i in 0..comp.gen_count {
                for j in 0..comp.gen_count {
                    g[(comp.gen_offset + i, comp.gen_offset + j)] = cm.gram[(i, j)].clone();
                }
            }
        }
        Some(g)
    }

    /// Coordinates of a global positive root in the global simple-root basis,
    /// if its factor has a coordinate model.
    pub fn root_coordinates(&self, global: usize) -> Option<Vec<Scalar>> {
        let (ci, l) = self.root_home[global];
        let comp = &self.components[ci];
        let Model::Coords(cm) = &comp.model else { return None };
        let mut v = vec![Scalar::zero(); self.rank];
        for (i, x) in cm.roots[l].iter().enumerate() {
            v[comp.gen_offset + i] = x.clone();
        }
        Some(v)
    }

    pub(crate) fn component(&self, ci: usize) -> &ComponentData {
        &self.components[ci]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn a2_basics() {
        let s = sys("A2");
        assert_eq!(s.n_positive_roots(), 3);
        assert_eq!(s.group_order(), 6);
        assert_eq!(s.bond(0, 1), 3);
    }

    #[test]
    fn root_counts_match_classification() {
        for (name, count) in [
            ("A3", 6),
            ("B3", 9),
            ("B4", 16),
            ("D4", 12),
            ("F4", 24),
            ("H3", 15),
            ("H4", 60),
            ("E6", 36),
            ("I2(5)", 5),
            ("I2(7)", 7),
            ("I2(12)", 12),
            ("A2xB2", 7),
        ] {
            assert_eq!(sys(name).n_positive_roots(), count, "{name}");
        }
    }

    #[test]
    fn e7_and_e8_root_closures() {
        assert_eq!(sys("E7").n_positive_roots(), 63);
        assert_eq!(sys("E8").n_positive_roots(), 120);
    }

    #[test]
    fn simple_roots_come_first() {
        let s = sys("A2xB2");
        for g in 0..s.rank() {
            let v = s.root_coordinates(g).unwrap();
            // the simple root of generator g is the g-th basis vector
            for (j, x) in v.iter().enumerate() {
                if j == g {
                    assert_eq!(*x, Scalar::one());
                } else {
                    assert!(x.is_zero());
                }
            }
        }
    }

    #[test]
    fn each_table_negates_exactly_one_root() {
        for name in ["A3", "B3", "D4", "H3", "F4", "I2(7)", "A2xB2"] {
            let s = sys(name);
            for g in 0..s.rank() {
                let t = &s.gen_tables[g];
                assert_eq!(t.negated_count(), 1, "{name} gen {g}");
                assert!(t.lookup(g).1, "{name}: generator {g} must negate its own root");
            }
        }
    }

    #[test]
    fn dihedral_model_has_no_coordinates() {
        let s = sys("I2(7)");
        assert!(s.bilinear_form().is_none());
        assert!(s.root_coordinates(0).is_none());
        let s5 = sys("I2(5)");
        assert!(s5.bilinear_form().is_some());
    }

    #[test]
    fn i2_aliases_of_a2_b2() {
        assert_eq!(sys("I2(3)").n_positive_roots(), sys("A2").n_positive_roots());
        assert_eq!(sys("I2(4)").n_positive_roots(), sys("B2").n_positive_roots());
        assert_eq!(sys("I2(6)").n_positive_roots(), 6);
    }
}
