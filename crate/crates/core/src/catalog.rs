//! Built-in matroids, addressable by name.
//!
//! Names follow `entry` or `entry:params`, e.g. `uniform:2,4`, `fano`,
//! `doubled_line_dual:4`. The `p7` entry is loaded from a circuit data file
//! at runtime (see [`P7_ENV_VAR`] and [`P7_DEFAULT_PATH`]) so the catalog
//! works without it.

use std::path::PathBuf;

use crate::circuits::CircuitFamily;
use crate::error::{Error, Result};
use crate::gf::{matroid_from_gf_matrix, GfMatrix};
use crate::io;
use crate::matroid::Matroid;
use crate::subset::{masks_of_weight, ElementSubset, MAX_GROUND_SIZE};

/// Overrides the search path for the `p7` circuit data file.
pub const P7_ENV_VAR: &str = "TROPBAS_P7_FILE";

/// Default location of the `p7` circuit data file, relative to the working
/// directory.
pub const P7_DEFAULT_PATH: &str = "data/p7.circuits";

/// A named catalog entry, parsed but not yet built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    /// All `(rank+1)`-subsets of `{1..size}` as circuits.
    Uniform { rank: u32, size: u32 },
    /// The seven nonzero vectors of GF(2)^3 as columns.
    Fano,
    /// The same seven columns over GF(3).
    NonFano,
    /// Dual of the `points`-element line with every element doubled:
    /// `2 * points` elements whose circuits are the complements of the
    /// `points` doubled pairs.
    DoubledLineDual { points: u32 },
    /// Cycle matroid of the multigraph with the given edges (endpoints
    /// 1-based; the vertex count is the largest endpoint).
    Graphic { edges: Vec<(u32, u32)> },
    /// Loaded from a circuit data file at runtime.
    P7,
}

impl CatalogEntry {
    /// Parses `name` or `name:p1,p2` forms.
    pub fn parse(spec: &str) -> Result<Self> {
        let unknown = || Error::UnknownCatalogName { name: spec.to_string() };
        let (name, params) = match spec.split_once(':') {
            Some((name, params)) => (name, Some(params)),
            None => (spec, None),
        };
        let want = |count: usize| -> Result<Vec<u32>> {
            let raw = params.ok_or_else(|| Error::InvalidCatalogParams {
                name: name.to_string(),
                msg: format!("expected {count} comma-separated integer parameter(s)"),
            })?;
            let values: Vec<u32> = raw
                .split(',')
                .map(|t| t.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidCatalogParams {
                    name: name.to_string(),
                    msg: format!("could not parse `{raw}` as integers"),
                })?;
            if values.len() != count {
                return Err(Error::InvalidCatalogParams {
                    name: name.to_string(),
                    msg: format!("expected {count} parameter(s), found {}", values.len()),
                });
            }
            Ok(values)
        };
        let bare = |entry: CatalogEntry| -> Result<CatalogEntry> {
            if params.is_some() {
                Err(Error::InvalidCatalogParams {
                    name: name.to_string(),
                    msg: "takes no parameters".into(),
                })
            } else {
                Ok(entry)
            }
        };
        match name {
            "uniform" => {
                let v = want(2)?;
                Ok(Self::Uniform { rank: v[0], size: v[1] })
            }
            "doubled_line_dual" => {
                let v = want(1)?;
                Ok(Self::DoubledLineDual { points: v[0] })
            }
            "graphic" => {
                let raw = params.ok_or_else(|| Error::InvalidCatalogParams {
                    name: name.to_string(),
                    msg: "expected an edge list like `graphic:1-2,2-3,3-1`".into(),
                })?;
                let mut edges = Vec::new();
                for part in raw.split(',') {
                    let bad = || Error::InvalidCatalogParams {
                        name: name.to_string(),
                        msg: format!("could not parse edge `{part}` (expected `u-v`)"),
                    };
                    let (u, v) = part.trim().split_once('-').ok_or_else(bad)?;
                    edges.push((
                        u.trim().parse().map_err(|_| bad())?,
                        v.trim().parse().map_err(|_| bad())?,
                    ));
                }
                Ok(Self::Graphic { edges })
            }
            "fano" => bare(Self::Fano),
            "nonfano" => bare(Self::NonFano),
            "p7" => bare(Self::P7),
            _ => Err(unknown()),
        }
    }

    /// The canonical `name:params` spelling.
    pub fn name(&self) -> String {
        match self {
            Self::Uniform { rank, size } => format!("uniform:{rank},{size}"),
            Self::Fano => "fano".into(),
            Self::NonFano => "nonfano".into(),
            Self::DoubledLineDual { points } => format!("doubled_line_dual:{points}"),
            Self::Graphic { edges } => {
                let parts: Vec<String> =
                    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                format!("graphic:{}", parts.join(","))
            }
            Self::P7 => "p7".into(),
        }
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            Self::Uniform { rank, size } => uniform(*rank, *size),
            Self::Fano => matroid_from_gf_matrix(&seven_point_matrix(2)?),
            Self::NonFano => matroid_from_gf_matrix(&seven_point_matrix(3)?),
            Self::DoubledLineDual { points } => doubled_line_dual(*points),
            Self::Graphic { edges } => graphic(edges),
            Self::P7 => load_p7(),
        }
    }
}

/// Circuits of the rank-`rank` uniform matroid: all `(rank+1)`-subsets.
fn uniform(rank: u32, size: u32) -> Result<Matroid> {
    if size > MAX_GROUND_SIZE {
        return Err(Error::GroundSetTooLarge { n: u64::from(size) });
    }
    if rank > size {
        return Err(Error::InvalidCatalogParams {
            name: "uniform".into(),
            msg: format!("rank {rank} exceeds ground set size {size}"),
        });
    }
    if rank == size {
        // Free matroid: no circuits.
        return Ok(Matroid::new(CircuitFamily::from_subsets(size, Vec::new())?));
    }
    let circuits: Vec<ElementSubset> = masks_of_weight(size, rank + 1)
        .map(ElementSubset::from_mask)
        .collect();
    Ok(Matroid::new(CircuitFamily::from_subsets(size, circuits)?))
}

/// Columns 1..=7 are the binary digits of the column index.
fn seven_point_matrix(modulus: u64) -> Result<GfMatrix> {
    let mut entries = [0i64; 21];
    for col in 1..=7usize {
        for row in 0..3usize {
            // Row 0 holds the 4-bit, row 2 the 1-bit.
            entries[row * 7 + (col - 1)] = (col >> (2 - row) & 1) as i64;
        }
    }
    GfMatrix::new(modulus, 3, 7, &entries)
}

/// `2 * points` elements in doubled pairs `{1,2}, {3,4}, ...`; the circuits
/// are the complements of the pairs. Needs `points >= 3` for simplicity.
fn doubled_line_dual(points: u32) -> Result<Matroid> {
    if points < 3 {
        return Err(Error::InvalidCatalogParams {
            name: "doubled_line_dual".into(),
            msg: format!("needs at least 3 points, got {points}"),
        });
    }
    let n = 2 * points;
    if n > MAX_GROUND_SIZE {
        return Err(Error::GroundSetTooLarge { n: u64::from(n) });
    }
    let full = ElementSubset::full(n);
    let circuits: Vec<ElementSubset> = (0..points)
        .map(|i| full.without(2 * i + 1).without(2 * i + 2))
        .collect();
    Ok(Matroid::new(CircuitFamily::from_subsets(n, circuits)?))
}

/// Cycle matroid of the multigraph spanned by `edges`; the vertex count is
/// the largest endpoint mentioned.
fn graphic(edges: &[(u32, u32)]) -> Result<Matroid> {
    let vertices = edges
        .iter()
        .map(|&(u, v)| u.max(v))
        .max()
        .ok_or_else(|| Error::InvalidCatalogParams {
            name: "graphic".into(),
            msg: "needs at least one edge".into(),
        })?;
    let g = crate::graph::MultiGraph::new(vertices, edges.to_vec())?;
    crate::graph::cycle_matroid(&g)
}

/// Paths searched for the `p7` data file, in order.
pub fn p7_search_paths() -> Vec<PathBuf> {
    let mut paths = Vec::new();
    if let Ok(p) = std::env::var(P7_ENV_VAR) {
        if !p.is_empty() {
            paths.push(PathBuf::from(p));
        }
    }
    paths.push(PathBuf::from(P7_DEFAULT_PATH));
    paths
}

/// The first existing `p7` data file, if any.
pub fn p7_available() -> Option<PathBuf> {
    p7_search_paths().into_iter().find(|p| p.exists())
}

fn load_p7() -> Result<Matroid> {
    let Some(path) = p7_available() else {
        let searched: Vec<String> = p7_search_paths()
            .iter()
            .map(|p| p.display().to_string())
            .collect();
        return Err(Error::DataFileMissing {
            name: "p7".into(),
            searched: searched.join(", "),
        });
    };
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    Ok(Matroid::new(io::parse_circuit_text(&text)?))
}
