use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use wdigraph::coxeter::CoxeterSystem;
use wdigraph::digraph::SLabeledDigraph;
use wdigraph::families;

use crate::CliConfig;

fn builtin(name: &str) -> Result<Option<CoxeterSystem>> {
    let w = match name.to_ascii_lowercase().as_str() {
        "a3" => (*families::type_a3()).clone(),
        "b3" => (*families::type_b3()).clone(),
        "h3" => (*families::type_h3()).clone(),
        "affine-a2" | "affine_a2" => (*families::affine_a2()).clone(),
        other => match other.strip_prefix("i2:") {
            Some("inf") => CoxeterSystem::dihedral(None)?,
            Some(n) => {
                let n: u32 = n.parse().with_context(|| format!("bad dihedral order in '{name}'"))?;
                CoxeterSystem::dihedral(Some(n))?
            }
            None => return Ok(None),
        },
    };
    Ok(Some(w))
}

fn bounded(w: CoxeterSystem, cfg: &CliConfig) -> CoxeterSystem {
    match cfg.orbit_bound {
        Some(b) => w.with_orbit_bound(b as usize),
        None => w,
    }
}

/// The system named by `--system`.
pub fn system(cfg: &CliConfig) -> Result<Arc<CoxeterSystem>> {
    let Some(spec) = &cfg.system else {
        bail!("this command needs --system (a file or one of a3, b3, h3, affine-a2, i2:N)");
    };
    let path = Path::new(spec);
    let w = if path.exists() {
        CoxeterSystem::load(path)?
    } else {
        match builtin(spec)? {
            Some(w) => w,
            None => bail!("'{spec}' is neither a file nor a built-in system"),
        }
    };
    Ok(Arc::new(bounded(w, cfg)))
}

pub fn digraph(path: &Path, cfg: &CliConfig) -> Result<SLabeledDigraph> {
    let g = SLabeledDigraph::load(path)?;
    Ok(match cfg.orbit_bound {
        Some(_) => SLabeledDigraph::new(
            Arc::new(bounded((**g.system()).clone(), cfg)),
            g.vertices().to_vec(),
            g.edges().to_vec(),
        ),
        None => g,
    })
}
