use std::sync::Arc;

use indexmap::IndexMap;
use sact_core::{fixtures, Act, Category, Monoid};

use crate::error::{CliError, Result};
use crate::format::{parse_document, Block, MonoidLookup};

/// Search bounds settable with `--bounds key=value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Act size for classifier sweeps; `None` uses each property's default.
    pub act_size: Option<usize>,
    /// Cover search bound; `None` uses the per-act default.
    pub cover_size: Option<usize>,
    /// Largest family tried by the compactness check.
    pub family: usize,
    /// Largest summand tried by the compactness check.
    pub summand_size: usize,
    /// Largest monoid order in `verify-paper` sweeps.
    pub monoid_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            act_size: None,
            cover_size: None,
            family: sact_core::structure::DEFAULT_FAMILY_BOUND,
            summand_size: sact_core::structure::DEFAULT_SUMMAND_SIZE,
            monoid_size: 4,
        }
    }
}

impl Bounds {
    pub const KEYS: [&'static str; 5] = [
        "act-size",
        "cover-size",
        "family",
        "summand-size",
        "monoid-size",
    ];

    /// Applies one `key=value` setting.
    pub fn set(&mut self, setting: &str) -> Result<()> {
        let bad = |why: &str| CliError::Bound(setting.to_owned(), why.to_owned());
        let (key, value) = setting
            .split_once('=')
            .ok_or_else(|| bad("expected key=value"))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| bad("value must be a non-negative integer"))?;
        match key.trim() {
            "act-size" => self.act_size = Some(value),
            "cover-size" => self.cover_size = Some(value),
            "family" => self.family = value,
            "summand-size" => self.summand_size = value,
            "monoid-size" => self.monoid_size = value,
            _ => return Err(bad(&format!("known keys are {}", Bounds::KEYS.join(", ")))),
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct NamedAct {
    pub monoid: String,
    pub act: Act,
}

/// Named monoids and acts, in load order. Names are unique across both.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    monoids: IndexMap<String, Arc<Monoid>>,
    acts: IndexMap<String, NamedAct>,
    pub bounds: Bounds,
}

impl MonoidLookup for Workspace {
    fn monoid(&self, name: &str) -> Option<Arc<Monoid>> {
        self.monoids.get(name).cloned()
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// The built-in examples: monoids `S2`, `E3` (`{1, 0, e}` with `e² = e`)
    /// and `G0` (the two-element group with a zero adjoined); acts `ActA`,
    /// `ActB`, `ActW`, `A1`, `A2` over `S2` in `acto`, and `ActA0`,
    /// `ActW0` in `act0`.
    pub fn seed_fixtures(&mut self) -> Result<()> {
        self.add_monoid("S2", fixtures::s2())?;
        self.add_monoid("E3", fixtures::idempotent_monoid())?;
        self.add_monoid("G0", fixtures::z2_with_zero())?;
        let acts = [
            ("ActA", fixtures::act_a(Category::Plain)),
            ("ActB", fixtures::act_b()),
            ("ActW", fixtures::act_w(Category::Plain)),
            ("A1", fixtures::a1()),
            ("A2", fixtures::a2()),
            ("ActA0", fixtures::act_a(Category::Zeroed)),
            ("ActW0", fixtures::act_w(Category::Zeroed)),
        ];
        for (name, act) in acts {
            self.add_act(name, "S2", act)?;
        }
        Ok(())
    }

    fn check_free(&self, name: &str) -> Result<()> {
        if self.monoids.contains_key(name) || self.acts.contains_key(name) {
            return Err(CliError::DuplicateName(name.to_owned()));
        }
        Ok(())
    }

    pub fn add_monoid(&mut self, name: &str, monoid: Arc<Monoid>) -> Result<()> {
        self.check_free(name)?;
        self.monoids.insert(name.to_owned(), monoid);
        Ok(())
    }

    pub fn add_act(&mut self, name: &str, monoid: &str, act: Act) -> Result<()> {
        self.check_free(name)?;
        let m = self.monoid_named(monoid)?;
        if *act.monoid() != *m {
            return Err(CliError::Core(sact_core::Error::MonoidMismatch));
        }
        self.acts.insert(
            name.to_owned(),
            NamedAct {
                monoid: monoid.to_owned(),
                act,
            },
        );
        Ok(())
    }

    /// Parses and adds every block of `text`.
    pub fn load_str(&mut self, text: &str) -> Result<()> {
        for block in parse_document(text, self)? {
            match block {
                Block::Monoid { name, monoid } => self.add_monoid(&name, Arc::new(monoid))?,
                Block::Act { name, monoid, act } => self.add_act(&name, &monoid, act)?,
            }
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &std::path::Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        self.load_str(&text)
    }

    pub fn monoid_named(&self, name: &str) -> Result<Arc<Monoid>> {
        self.monoid(name)
            .ok_or_else(|| CliError::UnknownMonoid(name.to_owned()))
    }

    pub fn act_named(&self, name: &str) -> Result<&NamedAct> {
        self.acts
            .get(name)
            .ok_or_else(|| CliError::UnknownAct(name.to_owned()))
    }

    pub fn monoids(&self) -> impl Iterator<Item = (&str, &Arc<Monoid>)> {
        self.monoids.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn acts(&self) -> impl Iterator<Item = (&str, &NamedAct)> {
        self.acts.iter().map(|(k, v)| (k.as_str(), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parse() {
        let mut b = Bounds::default();
        b.set("act-size=3").unwrap();
        b.set("family = 2").unwrap();
        assert_eq!(b.act_size, Some(3));
        assert_eq!(b.family, 2);
        assert!(b.set("depth=3").is_err());
        assert!(b.set("family=x").is_err());
        assert!(b.set("family").is_err());
    }

    #[test]
    fn names_are_unique() {
        let mut ws = Workspace::new();
        ws.seed_fixtures().unwrap();
        assert!(matches!(
            ws.add_monoid("ActA", fixtures::s2()),
            Err(CliError::DuplicateName(_))
        ));
        assert!(matches!(ws.act_named("nope"), Err(CliError::UnknownAct(_))));
        assert_eq!(ws.acts().count(), 7);
    }
}
