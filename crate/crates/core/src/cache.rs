//! On-disk JSON cache of Chevalley structure constants.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chevalley::{self, ChevalleyAlgebra};
use crate::error::Result;
use crate::rootsys::RootSystem;

/// Bumped whenever the root ordering or sign convention changes.
pub const CONVENTION_VERSION: u32 = 1;

pub const CACHE_DIR_ENV: &str = "GCSTRUCT_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    label: String,
    convention: u32,
    /// `[r, s, N_{r,s}]` over root indices.
    constants: Vec<(usize, usize, i64)>,
}

#[derive(Debug, Clone)]
pub struct ConstantCache {
    dir: PathBuf,
}

impl ConstantCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ConstantCache { dir: dir.into() }
    }

    /// An explicit directory wins over the environment variable.
    pub fn resolve(explicit: Option<&Path>) -> Option<Self> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(ConstantCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, rs: &RootSystem) -> PathBuf {
        self.dir.join(format!("{}.v{}.json", rs.label(), CONVENTION_VERSION))
    }

    /// Cached constants, if a valid entry exists.
    pub fn load(&self, rs: &RootSystem) -> Option<HashMap<(usize, usize), i64>> {
        let text = fs::read_to_string(self.path_for(rs)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.label != rs.label() || entry.convention != CONVENTION_VERSION {
            return None;
        }
        Some(entry.constants.into_iter().map(|(r, s, n)| ((r, s), n)).collect())
    }

    pub fn store(&self, rs: &RootSystem, constants: &HashMap<(usize, usize), i64>) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut list: Vec<(usize, usize, i64)> = constants.iter().map(|(&(r, s), &n)| (r, s, n)).collect();
        list.sort_unstable();
        let entry = Entry { label: rs.label(), convention: CONVENTION_VERSION, constants: list };
        let tmp = self.path_for(rs).with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, self.path_for(rs))?;
        Ok(())
    }

    pub fn algebra(&self, rs: &RootSystem) -> Result<ChevalleyAlgebra> {
        if let Some(c) = self.load(rs) {
            return Ok(ChevalleyAlgebra::from_constants(rs, c));
        }
        let c = chevalley::structure_constants(rs);
        self.store(rs, &c)?;
        Ok(ChevalleyAlgebra::from_constants(rs, c))
    }
}

/// Builds the algebra, going through the cache when one is configured.
pub fn build_algebra(rs: &RootSystem, cache: Option<&ConstantCache>) -> Result<ChevalleyAlgebra> {
    match cache {
        Some(c) => c.algebra(rs),
        None => Ok(ChevalleyAlgebra::build(rs)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ConstantCache::new(dir.path());
        let rs = RootSystem::build("B2").unwrap();
        assert!(cache.load(&rs).is_none());
        let built = cache.algebra(&rs).unwrap();
        let loaded = cache.load(&rs).unwrap();
        assert_eq!(&loaded, built.structure_constants());
        assert_eq!(&loaded, ChevalleyAlgebra::build(&rs).structure_constants());
        assert_eq!(cache.algebra(&rs).unwrap().jacobi_failures(), 0);
    }

    #[test]
    fn stale_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ConstantCache::new(dir.path());
        let rs = RootSystem::build("A2").unwrap();
        let path = cache.path_for(&rs);
        fs::write(&path, r#"{"label":"A2","convention":0,"constants":[]}"#).unwrap();
        assert!(cache.load(&rs).is_none());
        fs::write(&path, "not json").unwrap();
        assert!(cache.load(&rs).is_none());
    }

    #[test]
    fn explicit_dir_wins() {
        let c = ConstantCache::resolve(Some(Path::new("/tmp/x"))).unwrap();
        assert_eq!(c.dir(), Path::new("/tmp/x"));
    }
}
