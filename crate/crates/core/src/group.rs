//! Finite groups given by Cayley table.

use crate::error::{Error, Result};

/// A finite group stored extensionally. Elements are `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Checks the group axioms exhaustively and computes the inverse table.
    pub fn validate(table: Vec<Vec<usize>>, identity: usize) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 || identity >= n {
            return Err(Error::NoIdentity);
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::DimensionError { expected: n, found: row.len() });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::IndexOutOfRange(bad));
            }
        }
        if (0..n).any(|t| table[identity][t] != t || table[t][identity] != t) {
            return Err(Error::NoIdentity);
        }
        let mut inverse = vec![0; n];
        for t in 0..n {
            match (0..n).find(|&s| table[s][t] == identity && table[t][s] == identity) {
                Some(s) => inverse[t] = s,
                None => return Err(Error::NoInverse(t)),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NonAssociative(a, b, c));
                    }
                }
            }
        }
        let labels = default_labels(n, identity);
        Ok(FiniteGroup { table, identity, inverse, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FiniteGroup> {
        if labels.len() != self.order() {
            return Err(Error::DimensionError { expected: self.order(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group of order 0");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let g = FiniteGroup::validate(table, 0).expect("cyclic table");
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        g.with_labels(labels).expect("label count")
    }

    pub fn klein4() -> FiniteGroup {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let g = FiniteGroup::validate(table, 0).expect("klein table");
        g.with_labels(vec!["1".into(), "a".into(), "b".into(), "ab".into()]).expect("labels")
    }

    /// S3 as permutations of {0,1,2}, listed in lexicographic order.
    pub fn sym3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        let g = FiniteGroup::validate(table, 0).expect("s3 table");
        let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        g.with_labels(labels).expect("labels")
    }

    /// `cyclic(n)`, `klein4`, `sym3` (also `c<n>`, `v4`, `s3`).
    pub fn preset(name: &str) -> Result<FiniteGroup> {
        let lower = name.trim().to_ascii_lowercase();
        let parse_cyclic = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1);
        if let Some(n) = lower
            .strip_prefix("cyclic(")
            .and_then(|s| s.strip_suffix(')'))
            .and_then(parse_cyclic)
            .or_else(|| lower.strip_prefix('c').and_then(parse_cyclic))
        {
            return Ok(FiniteGroup::cyclic(n));
        }
        match lower.as_str() {
            "klein4" | "v4" => Ok(FiniteGroup::klein4()),
            "sym3" | "s3" => Ok(FiniteGroup::sym3()),
            _ => Err(Error::UnknownPreset(name.to_string())),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s][t]
    }

    pub fn inv(&self, t: usize) -> usize {
        self.inverse[t]
    }

    pub fn checked_mul(&self, s: usize, t: usize) -> Result<usize> {
        let n = self.order();
        if s >= n {
            return Err(Error::IndexOutOfRange(s));
        }
        if t >= n {
            return Err(Error::IndexOutOfRange(t));
        }
        Ok(self.table[s][t])
    }

    pub fn checked_inv(&self, t: usize) -> Result<usize> {
        self.inverse.get(t).copied().ok_or(Error::IndexOutOfRange(t))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, t: usize) -> &str {
        &self.labels[t]
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }
}

fn default_labels(n: usize, identity: usize) -> Vec<String> {
    (0..n)
        .map(|k| if k == identity { "1".to_string() } else { format!("x{k}") })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_inverse_table() {
        let g = FiniteGroup::validate(vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(g.inv(0), 0);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.mul(1, g.identity()), 1);
    }

    #[test]
    fn missing_inverse() {
        let r = FiniteGroup::validate(vec![vec![0, 1], vec![1, 1]], 0);
        assert_eq!(r, Err(Error::NoInverse(1)));
    }

    #[test]
    fn non_associative_table() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::validate(t, 0), Err(Error::NonAssociative(..))));
    }

    #[test]
    fn presets() {
        assert!(FiniteGroup::preset("cyclic(1)").unwrap().is_trivial());
        let c4 = FiniteGroup::preset("cyclic(4)").unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.inv(1), 3);
        let c3 = FiniteGroup::cyclic(3);
        assert_eq!(c3.inv(1), 2);
        assert!(FiniteGroup::preset("dodecahedral").is_err());
        assert!(FiniteGroup::preset("klein4").unwrap().is_abelian());
    }

    #[test]
    fn sym3_center_is_trivial() {
        let s3 = FiniteGroup::preset("sym3").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let center: Vec<usize> = s3
            .elements()
            .filter(|&z| s3.elements().all(|x| s3.mul(z, x) == s3.mul(x, z)))
            .collect();
        assert_eq!(center, vec![s3.identity()]);
    }

    #[test]
    fn presets_are_associative() {
        for name in ["c1", "c2", "c3", "c4", "klein4", "sym3"] {
            let g = FiniteGroup::preset(name).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    for c in g.elements() {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }
}
