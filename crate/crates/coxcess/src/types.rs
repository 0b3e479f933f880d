//! The classification of finite Coxeter groups and type descriptors.

use crate::error::Error;
use std::fmt;

/// Default cap on the total rank of a system.
pub const DEFAULT_RANK_LIMIT: usize = 10;

/// An irreducible factor in the classification.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Component {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral group of order 2m.
    I2(usize),
}

impl Component {
    pub fn rank(&self) -> usize {
        match *self {
            Component::A(n) | Component::B(n) | Component::D(n) => n,
            Component::E6 => 6,
            Component::E7 => 7,
            Component::E8 => 8,
            Component::F4 => 4,
            Component::H3 => 3,
            Component::H4 => 4,
            Component::I2(_) => 2,
        }
    }

    pub fn group_order(&self) -> u64 {
        match *self {
            Component::A(n) => factorial(n as u64 + 1),
            Component::B(n) => (1u64 << n) * factorial(n as u64),
            Component::D(n) => (1u64 << (n - 1)) * factorial(n as u64),
            Component::E6 => 51_840,
            Component::E7 => 2_903_040,
            Component::E8 => 696_729_600,
            Component::F4 => 1_152,
            Component::H3 => 120,
            Component::H4 => 14_400,
            Component::I2(m) => 2 * m as u64,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match *self {
            Component::A(n) => n * (n + 1) / 2,
            Component::B(n) => n * n,
            Component::D(n) => n * (n - 1),
            Component::E6 => 36,
            Component::E7 => 63,
            Component::E8 => 120,
            Component::F4 => 24,
            Component::H3 => 15,
            Component::H4 => 60,
            Component::I2(m) => m,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let ok = match *self {
            Component::A(n) => n >= 1,
            Component::B(n) => n >= 2,
            Component::D(n) => n >= 4,
            // m = 3, 4 are accepted as aliases of A2, B2; the construction
            // realises them with the same root data.
            Component::I2(m) => m >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidType(format!("parameter out of range for {self}")))
        }
    }

    /// Coxeter matrix of this factor, 0-based generators.
    pub fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let set = |m: &mut Vec<Vec<usize>>, i: usize, j: usize, v: usize| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match *self {
            Component::A(_) => {
                for i in 0..n - 1 {
                    set(&mut m, i, i + 1, 3);
                }
            }
            Component::B(_) => {
                for i in 0..n - 1 {
                    set(&mut m, i, i + 1, 3);
                }
                set(&mut m, n - 2, n - 1, 4);
            }
            Component::D(_) => {
                for i in 0..n - 2 {
                    set(&mut m, i, i + 1, 3);
                }
                set(&mut m, n - 3, n - 1, 3);
            }
            Component::E6 | Component::E7 | Component::E8 => {
                // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4.
                set(&mut m, 0, 2, 3);
                set(&mut m, 1, 3, 3);
                for i in 2..n - 1 {
                    set(&mut m, i, i + 1, 3);
                }
            }
            Component::F4 => {
                set(&mut m, 0, 1, 3);
                set(&mut m, 1, 2, 4);
                set(&mut m, 2, 3, 3);
            }
            Component::H3 | Component::H4 => {
                set(&mut m, 0, 1, 5);
                for i in 1..n - 1 {
                    set(&mut m, i, i + 1, 3);
                }
            }
            Component::I2(order) => {
                set(&mut m, 0, 1, order);
            }
        }
        m
    }

    /// Squared lengths ⟨α,α⟩ assigned to the simple roots.
    ///
    /// Standard integer root data keeps every entry of the bilinear form in
    /// Q(√5): long roots have norm 2, the short roots of B/F/I2(4) norm 1,
    /// and the long root of I2(6) norm 6.
    pub fn simple_norms(&self) -> Vec<i64> {
        let n = self.rank();
        match *self {
            Component::B(_) => {
                let mut v = vec![2; n];
                v[n - 1] = 1;
                v
            }
            Component::F4 => vec![2, 2, 1, 1],
            Component::I2(4) => vec![2, 1],
            Component::I2(6) => vec![2, 6],
            _ => vec![2; n],
        }
    }

    /// Whether this factor is modelled with explicit root coordinates.
    /// Dihedral factors with m ∉ {3,4,5,6} use a purely combinatorial model
    /// because cos(π/m) then lies outside Q(√5).
    pub fn has_coordinates(&self) -> bool {
        match *self {
            Component::I2(m) => matches!(m, 3..=6),
            _ => true,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Component::A(n) => write!(f, "A{n}"),
            Component::B(n) => write!(f, "B{n}"),
            Component::D(n) => write!(f, "D{n}"),
            Component::E6 => write!(f, "E6"),
            Component::E7 => write!(f, "E7"),
            Component::E8 => write!(f, "E8"),
            Component::F4 => write!(f, "F4"),
            Component::H3 => write!(f, "H3"),
            Component::H4 => write!(f, "H4"),
            Component::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A (possibly reducible) finite Coxeter type: a product of irreducible factors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoxeterType {
    components: Vec<Component>,
}

impl CoxeterType {
    pub fn new(components: Vec<Component>) -> Result<Self, Error> {
        Self::with_rank_limit(components, DEFAULT_RANK_LIMIT)
    }

    pub fn with_rank_limit(components: Vec<Component>, limit: usize) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::InvalidType("empty type".into()));
        }
        for c in &components {
            c.validate()?;
        }
        let rank: usize = components.iter().map(Component::rank).sum();
        if rank > limit {
            return Err(Error::RankLimit { rank, limit });
        }
        Ok(CoxeterType { components })
    }

    pub fn irreducible(c: Component) -> Result<Self, Error> {
        Self::new(vec![c])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Component::rank).sum()
    }

    pub fn group_order(&self) -> u64 {
        self.components.iter().map(Component::group_order).product()
    }

    pub fn positive_root_count(&self) -> usize {
        self.components.iter().map(Component::positive_root_count).sum()
    }

    /// Parse a descriptor such as `F4`, `A2xB2` or `I2(7)xA1`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut components = Vec::new();
        for part in s.split(['x', 'X', '*']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::InvalidType(format!("bad type descriptor {s:?}")));
            }
            components.push(parse_component(part)?);
        }
        Self::new(components)
    }
}

fn parse_component(s: &str) -> Result<Component, Error> {
    let bad = || Error::InvalidType(format!("unknown component {s:?}"));
    let upper = s.to_ascii_uppercase();
    if let Some(rest) = upper.strip_prefix("I2") {
        let inner = rest.trim_start_matches('(').trim_end_matches(')');
        let m: usize = inner.parse().map_err(|_| bad())?;
        return Ok(Component::I2(m));
    }
    let (head, num) = upper.split_at(1);
    let n: usize = num.parse().map_err(|_| bad())?;
    match head {
        "A" => Ok(Component::A(n)),
        "B" | "C" => Ok(Component::B(n)),
        "D" => Ok(Component::D(n)),
        "E" => match n {
            6 => Ok(Component::E6),
            7 => Ok(Component::E7),
            8 => Ok(Component::E8),
            _ => Err(bad()),
        },
        "F" if n == 4 => Ok(Component::F4),
        "H" => match n {
            3 => Ok(Component::H3),
            4 => Ok(Component::H4),
            _ => Err(bad()),
        },
        _ => Err(bad()),
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["A2", "B3", "D4", "E6", "F4", "H3", "I2(7)", "A2xB2", "I2(5)xA1"] {
            let t = CoxeterType::parse(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!(CoxeterType::parse("a2xb2").unwrap().to_string(), "A2xB2");
    }

    #[test]
    fn classification_constraints() {
        assert!(CoxeterType::parse("A0").is_err());
        assert!(CoxeterType::parse("B1").is_err());
        assert!(CoxeterType::parse("D3").is_err());
        assert!(CoxeterType::parse("I2(2)").is_err());
        assert!(CoxeterType::parse("E9").is_err());
        assert!(CoxeterType::parse("H5").is_err());
        assert!(CoxeterType::parse("F5").is_err());
        // rank limit
        assert!(matches!(CoxeterType::parse("B11"), Err(Error::RankLimit { .. })));
        assert!(CoxeterType::parse("B10").is_ok());
    }

    #[test]
    fn orders_and_root_counts() {
        let cases = [
            ("A2", 6, 3),
            ("A5", 720, 15),
            ("B3", 48, 9),
            ("D4", 192, 12),
            ("F4", 1152, 24),
            ("H3", 120, 15),
            ("H4", 14400, 60),
            ("E6", 51840, 36),
            ("E7", 2903040, 63),
            ("I2(7)", 14, 7),
            ("A2xB2", 48, 7),
        ];
        for (s, order, pos) in cases {
            let t = CoxeterType::parse(s).unwrap();
            assert_eq!(t.group_order(), order, "{s}");
            assert_eq!(t.positive_root_count(), pos, "{s}");
        }
        assert_eq!(CoxeterType::parse("E8").unwrap().group_order(), 696_729_600);
    }

    #[test]
    fn coxeter_matrix_shape() {
        let m = Component::F4.coxeter_matrix();
        assert_eq!(m[1][2], 4);
        assert_eq!(m[0][1], 3);
        assert_eq!(m[0][2], 2);
        for i in 0..4 {
            assert_eq!(m[i][i], 1);
            for j in 0..4 {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
        let d5 = Component::D(5).coxeter_matrix();
        assert_eq!(d5[2][4], 3);
        assert_eq!(d5[3][4], 2);
        let e7 = Component::E7.coxeter_matrix();
        assert_eq!(e7[1][3], 3);
        assert_eq!(e7[0][2], 3);
        assert_eq!(e7[0][1], 2);
    }
}
