//! Root system, Weyl group and graph bundled per type, built once and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::Result;
use crate::rootsys::{AffineType, RootSystem};
use crate::tqbg::Tqbg;
use crate::weyl::WeylGroup;

#[derive(Debug)]
pub struct Model {
    pub rs: RootSystem,
    pub group: WeylGroup,
    pub graph: Tqbg,
}

static CACHE: Lazy<Mutex<HashMap<AffineType, Arc<Model>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

impl Model {
    pub fn build(tag: AffineType) -> Result<Self> {
        let rs = RootSystem::build(tag)?;
        let group = WeylGroup::build(&rs)?;
        let graph = Tqbg::build(&rs, &group);
        Ok(Self { rs, group, graph })
    }

    /// Shared instance for `tag`, building it on first use.
    pub fn get(tag: AffineType) -> Result<Arc<Model>> {
        let tag = tag.normalized();
        if let Some(m) = CACHE.lock().expect("model cache poisoned").get(&tag) {
            return Ok(Arc::clone(m));
        }
        // Build outside the lock; a racing builder just loses its copy.
        let built = Arc::new(Model::build(tag)?);
        let mut cache = CACHE.lock().expect("model cache poisoned");
        Ok(Arc::clone(cache.entry(tag).or_insert(built)))
    }

    pub fn tag(&self) -> AffineType {
        self.rs.tag()
    }
}
