//! JSON config schema and its translation to surface data.
//!
//! ```json
//! {
//!   "surface": {
//!     "name": "K3",
//!     "bundles": { "L": {"h": [8]}, "L2": {"h": [26]} }
//!   },
//!   "query": { "mode": "s2_n2" }
//! }
//! ```
//!
//! `surface.name` selects a preset (`rational_qpg0`, `K3`, `abelian`, or
//! `custom`, the default); presets pin `hO`, `custom` requires it. Bundle
//! keys are the slot names `L`, `L2`, `A`, `LA`, `L2A`, `L2A2`, each with a
//! dimension vector `h` indexed by degree. The alternative `"p2": {"d": 1,
//! "e": 1}` builds the exact ℙ² model with `L = O(d)`, `A = O(e)` (`e`
//! defaults to 0), including section bases and multiplication tables, which
//! dimension-level configs cannot express.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use tautcoh_core::surface::{p2_surface, preset_surface, Preset};
use tautcoh_core::{GradedDim, Slot, SurfaceData};

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub surface: Option<SurfaceConfig>,
    #[serde(default)]
    pub query: QueryConfig,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceConfig {
    pub name: Option<String>,
    #[serde(rename = "hO")]
    pub h_o: Option<Vec<usize>>,
    pub bundles: Option<BTreeMap<String, BundleConfig>>,
    pub p2: Option<P2Config>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleConfig {
    pub h: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct P2Config {
    pub d: i64,
    #[serde(default)]
    pub e: i64,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryConfig {
    pub mode: Option<String>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub suite: Option<String>,
}

pub fn load_config(path: &Path) -> Result<ConfigFile> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

/// Builds the surface a config describes; `None` when the config has no
/// surface section at all (check-only configs).
pub fn build_surface(cfg: &ConfigFile) -> Result<Option<SurfaceData>> {
    let Some(surface) = &cfg.surface else {
        return Ok(None);
    };
    if let Some(p2) = &surface.p2 {
        if surface.h_o.is_some() || surface.bundles.is_some() {
            bail!("the p2 shortcut supplies hO and all bundles; remove those fields");
        }
        return Ok(Some(p2_surface(p2.d, p2.e)));
    }
    let preset = match surface.name.as_deref() {
        None => Preset::Custom,
        Some(name) => Preset::parse(name).with_context(|| {
            format!(
                "unknown surface name {name:?}; use rational_qpg0, K3, abelian, custom, \
                 or the p2 shortcut"
            )
        })?,
    };
    let mut dims = BTreeMap::new();
    if let Some(h_o) = &surface.h_o {
        dims.insert(Slot::O, GradedDim::from(h_o.clone()));
    }
    for (key, bundle) in surface.bundles.iter().flatten() {
        let slot = Slot::parse(key)
            .with_context(|| format!("unknown bundle slot {key:?}; use L, L2, A, LA, L2A, L2A2"))?;
        if slot == Slot::O {
            bail!("give the structure sheaf as \"hO\", not as a bundle entry");
        }
        dims.insert(slot, GradedDim::from(bundle.h.clone()));
    }
    Ok(Some(preset_surface(preset, &dims)?))
}
