//! Named registry of the simple groups the toolkit works with.
//!
//! Alternating and PSL groups are built from their constructors. Groups that
//! are awkward to build from matrices (U3(3), U4(2), M11) ship as generator
//! files. Every group is checked against its closed-form order before it is
//! handed out.

mod genfile;

pub use genfile::GeneratorFile;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use crate::constructors::{alternating_group, psl_group, symmetric_group, GroupFamily};
use crate::error::{Error, GeneratorFileError, Result};
use crate::perm::PermGroup;
use crate::uset::arith::classify_k;

/// Generator files compiled into the library.
const EMBEDDED_FILES: &[(&str, &str)] = &[
    ("u3_3.gens", include_str!("../../data/u3_3.gens")),
    ("u4_2.gens", include_str!("../../data/u4_2.gens")),
    ("m11.gens", include_str!("../../data/m11.gens")),
];

const ALTERNATING: &[u32] = &[5, 6, 7, 8, 9, 10];
const PSL2_FIELDS: &[u64] = &[4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];
const PSL3_FIELDS: &[u64] = &[3, 4, 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Constructor,
    GeneratorFile(GeneratorFile),
}

/// A registered group. The permutation group is built on first access and
/// only returned once its order has been validated.
#[derive(Debug)]
pub struct CatalogEntry {
    name: String,
    family: Option<GroupFamily>,
    source: Source,
    expected_order: u64,
    provenance: String,
    group: OnceLock<Arc<PermGroup>>,
}

impl CatalogEntry {
    fn constructed(family: GroupFamily) -> Result<Self> {
        let expected_order = family.order()?;
        Ok(Self {
            name: family.to_string(),
            family: Some(family),
            source: Source::Constructor,
            expected_order,
            provenance: format!("closed-form order of {family}"),
            group: OnceLock::new(),
        })
    }

    /// An entry backed by a generator file. Known families take their
    /// expected order from the closed form, which must agree with the file's
    /// declared order; otherwise the declared order is used.
    pub fn from_generator_file(file: GeneratorFile, fallback_name: &str) -> Result<Self> {
        let raw_name = file
            .name
            .clone()
            .unwrap_or_else(|| fallback_name.to_string());
        let family = GroupFamily::parse(&raw_name).ok();
        let (name, expected_order, provenance) = match family {
            Some(f) => {
                let closed = f.order()?;
                if closed != file.order {
                    return Err(GeneratorFileError::OrderMismatch {
                        declared: file.order,
                        actual: closed,
                    }
                    .into());
                }
                (f.to_string(), closed, format!("closed-form order of {f}"))
            }
            None => (
                raw_name,
                file.order,
                "declared in generator file".to_string(),
            ),
        };
        let group = file.to_group()?;
        let entry = Self {
            name,
            family,
            source: Source::GeneratorFile(file),
            expected_order,
            provenance,
            group: OnceLock::new(),
        };
        let _ = entry.group.set(Arc::new(group));
        Ok(entry)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> Option<GroupFamily> {
        self.family
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn expected_order(&self) -> u64 {
        self.expected_order
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Number of distinct primes dividing the order.
    pub fn prime_count(&self) -> usize {
        classify_k(self.expected_order).0
    }

    /// The validated group.
    pub fn group(&self) -> Result<Arc<PermGroup>> {
        if let Some(g) = self.group.get() {
            return Ok(Arc::clone(g));
        }
        let g = match (&self.source, self.family) {
            (Source::GeneratorFile(f), _) => f.to_group()?,
            (Source::Constructor, Some(family)) => build(family)?,
            (Source::Constructor, None) => unreachable!("constructor entries carry a family"),
        };
        if g.order() != self.expected_order {
            return Err(Error::OrderMismatch {
                name: self.name.clone(),
                expected: self.expected_order,
                actual: g.order(),
            });
        }
        Ok(Arc::clone(self.group.get_or_init(|| Arc::new(g))))
    }
}

fn build(family: GroupFamily) -> Result<PermGroup> {
    match family {
        GroupFamily::Alt(n) => alternating_group(n as usize),
        GroupFamily::Sym(n) => symmetric_group(n as usize),
        GroupFamily::Psl { n, q } => psl_group(n as usize, q),
        other => Err(Error::InvalidParameters(format!(
            "{other} has no constructor; supply a generator file"
        ))),
    }
}

/// Filter for [`Catalog::list`].
#[derive(Debug, Clone, Copy, Default)]
pub struct CatalogFilter {
    /// Keep groups whose order has exactly this many distinct primes.
    pub prime_count: Option<usize>,
    pub max_order: Option<u64>,
}

impl CatalogFilter {
    fn accepts(&self, e: &CatalogEntry) -> bool {
        self.prime_count.is_none_or(|k| e.prime_count() == k)
            && self.max_order.is_none_or(|m| e.expected_order() <= m)
    }
}

/// The group registry. Built once; lookups are safe from many threads.
#[derive(Debug)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
    /// Groups built on demand for names outside the registry.
    extra: Mutex<BTreeMap<String, Arc<PermGroup>>>,
}

impl Catalog {
    /// The standard registry with the generator files compiled into the
    /// library.
    pub fn builtin() -> Result<Self> {
        let mut cat = Self::constructors_only()?;
        for (file_name, text) in EMBEDDED_FILES {
            let file = GeneratorFile::parse(text)?;
            cat.insert(CatalogEntry::from_generator_file(file, stem(file_name))?);
        }
        Ok(cat)
    }

    /// The standard constructors plus every `*.gens` file in `dir`. Files in
    /// `dir` replace the embedded ones of the same name; embedded files not
    /// present in `dir` are still registered.
    pub fn with_data_dir(dir: &Path) -> Result<Self> {
        let mut cat = Self::builtin()?;
        let read_dir = std::fs::read_dir(dir).map_err(|source| GeneratorFileError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut paths: Vec<_> = read_dir
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "gens"))
            .collect();
        paths.sort();
        for path in paths {
            cat.insert(load_generator_file(&path)?);
        }
        Ok(cat)
    }

    fn constructors_only() -> Result<Self> {
        let mut cat = Self {
            entries: BTreeMap::new(),
            extra: Mutex::new(BTreeMap::new()),
        };
        for &n in ALTERNATING {
            cat.insert(CatalogEntry::constructed(GroupFamily::Alt(n))?);
        }
        for &q in PSL2_FIELDS {
            cat.insert(CatalogEntry::constructed(GroupFamily::Psl { n: 2, q })?);
        }
        for &q in PSL3_FIELDS {
            cat.insert(CatalogEntry::constructed(GroupFamily::Psl { n: 3, q })?);
        }
        Ok(cat)
    }

    fn insert(&mut self, entry: CatalogEntry) {
        self.entries.insert(entry.name.clone(), entry);
    }

    /// Canonical form of a group name: `L2(11)` → `PSL(2,11)`,
    /// `PSU(3,3)` → `U3(3)`. Names outside the known families are returned
    /// trimmed.
    pub fn canonical_name(name: &str) -> String {
        GroupFamily::parse(name)
            .map(|f| f.to_string())
            .unwrap_or_else(|_| name.trim().to_string())
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.get(&Self::canonical_name(name))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entry(name).is_some()
    }

    /// The validated group registered under `name`. Alternating, symmetric
    /// and PSL groups outside the registry are constructed on demand (and
    /// validated the same way).
    pub fn get(&self, name: &str) -> Result<Arc<PermGroup>> {
        let canonical = Self::canonical_name(name);
        if let Some(e) = self.entries.get(&canonical) {
            return e.group();
        }
        let unknown = || Error::UnknownGroup {
            name: name.to_string(),
            known: self.names(),
        };
        let family = GroupFamily::parse(name).map_err(|_| unknown())?;
        if !matches!(
            family,
            GroupFamily::Alt(_) | GroupFamily::Sym(_) | GroupFamily::Psl { .. }
        ) {
            return Err(unknown());
        }
        if let Some(g) = self.extra.lock().unwrap().get(&canonical) {
            return Ok(Arc::clone(g));
        }
        let entry = CatalogEntry::constructed(family)?;
        let g = entry.group()?;
        self.extra.lock().unwrap().insert(canonical, Arc::clone(&g));
        Ok(g)
    }

    /// Registered names in natural order (`A5` before `A10`).
    pub fn names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.entries.keys().cloned().collect();
        names.sort_by_key(|n| natural_key(n));
        names
    }

    /// Entries passing `filter`, in natural name order.
    pub fn list(&self, filter: &CatalogFilter) -> Vec<&CatalogEntry> {
        self.names()
            .iter()
            .map(|n| &self.entries[n])
            .filter(|e| filter.accepts(e))
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }
}

/// Reads a generator file and turns it into a validated catalog entry.
pub fn load_generator_file(path: &Path) -> Result<CatalogEntry> {
    let file = GeneratorFile::read(path)?;
    let fallback = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    CatalogEntry::from_generator_file(file, &fallback)
}

fn stem(file_name: &str) -> &str {
    file_name.split('.').next().unwrap_or(file_name)
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Chunk {
    Text(String),
    Number(u64),
}

/// Splits a name into text and number runs so that numbers compare by value.
fn natural_key(s: &str) -> Vec<Chunk> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            let mut n = 0u64;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                n = n.saturating_mul(10).saturating_add(d as u64);
                chars.next();
            }
            out.push(Chunk::Number(n));
        } else {
            let mut t = String::new();
            while let Some(&c) = chars.peek().filter(|c| !c.is_ascii_digit()) {
                t.push(c);
                chars.next();
            }
            out.push(Chunk::Text(t));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        let mut v = vec!["A10", "A5", "PSL(2,11)", "PSL(2,4)", "M11"];
        v.sort_by_key(|n| natural_key(n));
        assert_eq!(v, vec!["A5", "A10", "M11", "PSL(2,4)", "PSL(2,11)"]);
    }

    #[test]
    fn canonical_names() {
        assert_eq!(Catalog::canonical_name("L2(11)"), "PSL(2,11)");
        assert_eq!(Catalog::canonical_name("PSU(4,2)"), "U4(2)");
        assert_eq!(Catalog::canonical_name(" J2 "), "J2");
    }

    #[test]
    fn unknown_names_list_known_ones() {
        let cat = Catalog::builtin().unwrap();
        match cat.get("J2") {
            Err(Error::UnknownGroup { name, known }) => {
                assert_eq!(name, "J2");
                assert!(known.contains(&"PSL(2,11)".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn on_demand_psl() {
        let cat = Catalog::builtin().unwrap();
        assert!(!cat.contains("PSL(2,29)"));
        assert_eq!(cat.get("L2(29)").unwrap().order(), 29 * (29 * 29 - 1) / 2);
    }

    #[test]
    fn file_name_must_agree_with_closed_form() {
        let f = GeneratorFile::parse("# name: A5\ndegree 5\norder 59\n(1,2,3)\n").unwrap();
        assert!(matches!(
            CatalogEntry::from_generator_file(f, "x"),
            Err(Error::GeneratorFile(GeneratorFileError::OrderMismatch {
                declared: 59,
                actual: 60
            }))
        ));
    }
}
