//! Finite monoids given by multiplication tables.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite monoid with a zero element, `0 != 1`.
///
/// Elements are opaque labels addressed by dense indices; `mul(x, y)` is a
/// table lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monoid {
    labels: Vec<String>,
    mul: Vec<usize>,
    one: usize,
    zero: usize,
}

/// A finite monoid that is not required to have a zero. Only used as input
/// to [`crate::adjoin_zero`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainMonoid {
    labels: Vec<String>,
    mul: Vec<usize>,
    one: usize,
}

impl Monoid {
    /// Validates a raw table. `table[x][y]` is the index of `x·y`.
    pub fn new(
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        one: usize,
        zero: usize,
    ) -> Result<Self> {
        let mul = check_table(&labels, &table)?;
        let n = labels.len();
        for idx in [one, zero] {
            if idx >= n {
                return Err(Error::ElementOutOfRange(idx));
            }
        }
        if one == zero {
            return Err(Error::ZeroEqualsOne);
        }
        check_identity(&labels, &mul, one)?;
        for x in 0..n {
            if mul[zero * n + x] != zero || mul[x * n + zero] != zero {
                return Err(Error::BadZero(labels[x].clone()));
            }
        }
        check_associative(&labels, &mul)?;
        Ok(Monoid {
            labels,
            mul,
            one,
            zero,
        })
    }

    /// Builds a monoid from a table written with labels instead of indices.
    pub fn from_label_table<S: AsRef<str>>(
        labels: &[S],
        rows: &[Vec<S>],
        one: &str,
        zero: &str,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let table = resolve_rows(&labels, rows)?;
        let one = lookup(&labels, one)?;
        let zero = lookup(&labels, zero)?;
        Monoid::new(labels, table, one, zero)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.labels.len() + y]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.size())
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Forgets which element is the zero.
    pub fn to_plain(&self) -> PlainMonoid {
        PlainMonoid {
            labels: self.labels.clone(),
            mul: self.mul.clone(),
            one: self.one,
        }
    }
}

impl fmt::Debug for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Monoid")
            .field("labels", &self.labels)
            .field("table", &self.table())
            .field("one", &self.labels[self.one])
            .field("zero", &self.labels[self.zero])
            .finish()
    }
}

impl PlainMonoid {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, one: usize) -> Result<Self> {
        let mul = check_table(&labels, &table)?;
        if one >= labels.len() {
            return Err(Error::ElementOutOfRange(one));
        }
        check_identity(&labels, &mul, one)?;
        check_associative(&labels, &mul)?;
        Ok(PlainMonoid { labels, mul, one })
    }

    pub fn from_label_table<S: AsRef<str>>(
        labels: &[S],
        rows: &[Vec<S>],
        one: &str,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let table = resolve_rows(&labels, rows)?;
        let one = lookup(&labels, one)?;
        PlainMonoid::new(labels, table, one)
    }

    /// The cyclic group of the given order, elements `1, g, g^2, ...`.
    pub fn cyclic_group(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::TableShape("a group has at least one element".into()));
        }
        let labels = (0..order)
            .map(|k| match k {
                0 => "1".to_owned(),
                1 => "g".to_owned(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..order)
            .map(|x| (0..order).map(|y| (x + y) % order).collect())
            .collect();
        PlainMonoid::new(labels, table, 0)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.labels.len() + y]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

fn lookup(labels: &[String], label: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
}

fn resolve_rows<S: AsRef<str>>(labels: &[String], rows: &[Vec<S>]) -> Result<Vec<Vec<usize>>> {
    rows.iter()
        .map(|row| row.iter().map(|l| lookup(labels, l.as_ref())).collect())
        .collect()
}

fn check_table(labels: &[String], table: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = labels.len();
    let mut seen = HashSet::with_capacity(n);
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    if table.len() != n {
        return Err(Error::TableShape(format!(
            "expected {n} rows, got {}",
            table.len()
        )));
    }
    let mut mul = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::TableShape(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for &v in row {
            if v >= n {
                return Err(Error::ElementOutOfRange(v));
            }
            mul.push(v);
        }
    }
    Ok(mul)
}

fn check_identity(labels: &[String], mul: &[usize], one: usize) -> Result<()> {
    let n = labels.len();
    for x in 0..n {
        if mul[one * n + x] != x || mul[x * n + one] != x {
            return Err(Error::BadIdentity(labels[x].clone()));
        }
    }
    Ok(())
}

fn check_associative(labels: &[String], mul: &[usize]) -> Result<()> {
    let n = labels.len();
    for x in 0..n {
        for y in 0..n {
            let xy = mul[x * n + y];
            for z in 0..n {
                if mul[xy * n + z] != mul[x * n + mul[y * n + z]] {
                    return Err(Error::NotAssociative {
                        x: labels[x].clone(),
                        y: labels[y].clone(),
                        z: labels[z].clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn two_element_monoid_is_valid() {
        let m = Monoid::from_label_table(&["1", "0"], &[vec!["1", "0"], vec!["0", "0"]], "1", "0")
            .unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.mul(m.one(), m.zero()), m.zero());
    }

    #[test]
    fn single_element_has_zero_equal_one() {
        let err = Monoid::new(s(&["1"]), vec![vec![0]], 0, 0).unwrap_err();
        assert_eq!(err, Error::ZeroEqualsOne);
    }

    /// Brute-force triple scan used to confirm that the table below really is
    /// non-associative before asserting on the validator's answer.
    fn first_non_associative(t: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = t.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if t[t[x][y]][z] != t[x][t[y][z]] {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // {1, 0, e} with e·e = e is fine.
        let t = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]];
        assert!(first_non_associative(&t).is_none());
        // e·e = f, f·e = f but e·f = 1: (ee)e = f while e(ee) = 1.
        let t = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 1, 1],
            vec![2, 1, 3, 0],
            vec![3, 1, 3, 3],
        ];
        let (x, y, z) = first_non_associative(&t).expect("oracle finds a witness");
        let labels = s(&["1", "0", "e", "f"]);
        let err = Monoid::new(labels.clone(), t, 0, 1).unwrap_err();
        assert_eq!(
            err,
            Error::NotAssociative {
                x: labels[x].clone(),
                y: labels[y].clone(),
                z: labels[z].clone()
            }
        );
    }

    #[test]
    fn validator_reports_identity_and_zero_witnesses() {
        let err = Monoid::new(
            s(&["1", "0", "a"]),
            vec![vec![0, 1, 1], vec![1, 1, 1], vec![2, 1, 2]],
            0,
            1,
        )
        .unwrap_err();
        assert_eq!(err, Error::BadIdentity("a".into()));
        let err = Monoid::new(
            s(&["1", "0", "a"]),
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]],
            0,
            1,
        )
        .unwrap_err();
        assert_eq!(err, Error::BadZero("a".into()));
        let err = Monoid::new(s(&["1", "1"]), vec![vec![0, 1], vec![1, 1]], 0, 1).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("1".into()));
    }

    #[test]
    fn cyclic_group_table() {
        let g = PlainMonoid::cyclic_group(3).unwrap();
        assert_eq!(g.mul(1, 2), 0);
        assert_eq!(g.labels(), &s(&["1", "g", "g2"])[..]);
    }
}
