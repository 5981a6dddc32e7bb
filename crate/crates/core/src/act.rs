//! Left acts over a finite monoid with zero.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::monoid::Monoid;
use crate::subact::Subact;

/// Which of the two act categories an act (or morphism) is considered in.
///
/// `Plain` is the category of all left acts together with the empty act as
/// initial object; coproducts are disjoint unions and morphisms need only be
/// equivariant. `Zeroed` is the category of acts with exactly one zero
/// element; morphisms preserve that zero and coproducts glue the zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Plain,
    Zeroed,
}

impl Category {
    pub const ALL: [Category; 2] = [Category::Plain, Category::Zeroed];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Plain => "acto",
            Category::Zeroed => "act0",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "acto" => Ok(Category::Plain),
            "act0" => Ok(Category::Zeroed),
            other => Err(format!(
                "unknown category `{other}` (expected acto or act0)"
            )),
        }
    }
}

/// A finite left act `S × A → A`.
///
/// The action is stored row-major by monoid element: `act(s, a)` reads
/// `action[s * |A| + a]`. In [`Category::Zeroed`] the designated zero is the
/// unique element of the zero set `0A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Act {
    monoid: Arc<Monoid>,
    labels: Vec<String>,
    action: Vec<usize>,
    category: Category,
    zero: Option<usize>,
}

impl Act {
    /// Validates an action table; `rows[s][a]` is the index of `s·a`.
    pub fn new(
        monoid: Arc<Monoid>,
        labels: Vec<String>,
        rows: Vec<Vec<usize>>,
        category: Category,
    ) -> Result<Self> {
        let n = labels.len();
        let mut seen = std::collections::HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if rows.len() != monoid.size() {
            return Err(Error::TableShape(format!(
                "expected {} rows (one per monoid element), got {}",
                monoid.size(),
                rows.len()
            )));
        }
        let mut action = Vec::with_capacity(monoid.size() * n);
        for (s, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::TableShape(format!(
                    "row for `{}` has {} entries, expected {n}",
                    monoid.label(s),
                    row.len()
                )));
            }
            for &b in row {
                if b >= n {
                    return Err(Error::ElementOutOfRange(b));
                }
                action.push(b);
            }
        }
        let act = Act {
            monoid,
            labels,
            action,
            category: Category::Plain,
            zero: None,
        };
        act.check_laws()?;
        act.view(category)
    }

    /// Builds an act from a table written with labels.
    pub fn from_label_table<S: AsRef<str>>(
        monoid: Arc<Monoid>,
        labels: &[S],
        rows: &[Vec<S>],
        category: Category,
    ) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| {
                        labels
                            .iter()
                            .position(|x| x == l.as_ref())
                            .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_owned()))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Act::new(monoid, labels, rows, category)
    }

    /// The initial object of the plain category.
    pub fn empty(monoid: Arc<Monoid>) -> Act {
        Act {
            action: Vec::new(),
            monoid,
            labels: Vec::new(),
            category: Category::Plain,
            zero: None,
        }
    }

    /// The one-element act `θ`.
    pub fn theta(monoid: Arc<Monoid>, category: Category) -> Act {
        let rows = vec![vec![0]; monoid.size()];
        Act::new(monoid, vec!["θ".to_owned()], rows, category).expect("θ is always an act")
    }

    /// The monoid acting on itself by left multiplication.
    pub fn regular(monoid: Arc<Monoid>, category: Category) -> Act {
        let rows = monoid
            .elements()
            .map(|s| monoid.elements().map(|x| monoid.mul(s, x)).collect())
            .collect();
        let labels = monoid.labels().to_vec();
        Act::new(monoid, labels, rows, category).expect("the regular act is an act")
    }

    fn check_laws(&self) -> Result<()> {
        let m = &self.monoid;
        for a in self.elements() {
            if self.act(m.one(), a) != a {
                return Err(Error::UnitLaw(self.labels[a].clone()));
            }
        }
        for s in m.elements() {
            for t in m.elements() {
                let st = m.mul(s, t);
                for a in self.elements() {
                    if self.act(st, a) != self.act(s, self.act(t, a)) {
                        return Err(Error::NotCompatible {
                            s: m.label(s).to_owned(),
                            t: m.label(t).to_owned(),
                            a: self.labels[a].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The same carrier considered in another category.
    ///
    /// Viewing in [`Category::Plain`] always succeeds; viewing in
    /// [`Category::Zeroed`] requires a nonempty act with exactly one zero.
    pub fn view(&self, category: Category) -> Result<Act> {
        let mut out = self.clone();
        out.category = category;
        out.zero = match category {
            Category::Plain => None,
            Category::Zeroed => {
                if self.is_empty() {
                    return Err(Error::EmptyZeroedAct);
                }
                let zeros = self.zero_elements();
                if zeros.len() != 1 {
                    return Err(Error::ZeroSetNotSingleton(
                        zeros.iter().map(|&z| self.labels[z].clone()).collect(),
                    ));
                }
                Some(zeros[0])
            }
        };
        Ok(out)
    }

    /// Same table, new element labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Act> {
        if labels.len() != self.size() {
            return Err(Error::TableShape(format!(
                "expected {} labels, got {}",
                self.size(),
                labels.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut out = self.clone();
        out.labels = labels;
        Ok(out)
    }

    pub(crate) fn from_parts_unchecked(
        monoid: Arc<Monoid>,
        labels: Vec<String>,
        action: Vec<usize>,
        category: Category,
    ) -> Act {
        let act = Act {
            monoid,
            labels,
            action,
            category: Category::Plain,
            zero: None,
        };
        debug_assert!(act.check_laws().is_ok());
        act.view(category).expect("construction yields a valid act")
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    pub fn monoid_arc(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn same_monoid(&self, other: &Act) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || *self.monoid == *other.monoid
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn category(&self) -> Category {
        self.category
    }

    /// The designated zero; present exactly in [`Category::Zeroed`].
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    #[inline]
    pub fn act(&self, s: usize, a: usize) -> usize {
        self.action[s * self.labels.len() + a]
    }

    pub fn row(&self, s: usize) -> &[usize] {
        let n = self.labels.len();
        &self.action[s * n..(s + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.monoid
            .elements()
            .map(|s| self.row(s).to_vec())
            .collect()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Indices of `0A = {0·a}`, ascending. Every element of `S` fixes them.
    pub fn zero_elements(&self) -> Vec<usize> {
        let mut set = FixedBitSet::with_capacity(self.size());
        for a in self.elements() {
            set.insert(self.act(self.monoid.zero(), a));
        }
        set.ones().collect()
    }

    pub fn is_zero_element(&self, a: usize) -> bool {
        self.act(self.monoid.zero(), a) == a
    }

    /// The zero set `0A` as a subact.
    pub fn zero_set(&self) -> Subact {
        Subact::from_indices_unchecked(self.size(), self.zero_elements())
    }

    /// The cyclic subact `Sa`.
    pub fn orbit(&self, a: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.size());
        for s in self.monoid.elements() {
            set.insert(self.act(s, a));
        }
        set
    }

    pub fn orbits(&self) -> Vec<FixedBitSet> {
        self.elements().map(|a| self.orbit(a)).collect()
    }
}

impl fmt::Debug for Act {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<&str>> = self
            .monoid
            .elements()
            .map(|s| {
                self.row(s)
                    .iter()
                    .map(|&b| self.labels[b].as_str())
                    .collect()
            })
            .collect();
        f.debug_struct("Act")
            .field("category", &self.category)
            .field("labels", &self.labels)
            .field("rows", &rows)
            .finish()
    }
}
