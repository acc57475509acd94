//! Set-specification documents: the JSON input format for systems.
//!
//! ```json
//! {"type": "self_similar",
//!  "maps": [{"r": "1/3", "a": "0"}, {"r": "1/3", "a": "2/3"}]}
//! ```
//!
//! Rationals are exact strings ("1/3", "0.3" = 3/10). An optional "hull"
//! on self-similar systems is validated against the computed hull. Moran
//! two-branch systems declare hull, end fractions, and the structural
//! constants, with an optional explicit first refinement:
//!
//! ```json
//! {"type": "moran_two_branch", "hull": ["0", "1"],
//!  "left": "1/4", "right": "1/4",
//!  "s_min": "1/4", "kappa": "1/2",
//!  "first_level": [["0", "2/5"], ["3/5", "1"]]}
//! ```

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::parse_rational;
use crate::system::{CantorSystem, MoranRule, MoranSystem, SelfSimilarSystem};
use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetSpecDoc {
    #[serde(rename = "type")]
    kind: String,
    maps: Option<Vec<MapDoc>>,
    hull: Option<[String; 2]>,
    left: Option<String>,
    right: Option<String>,
    s_min: Option<String>,
    kappa: Option<String>,
    first_level: Option<Vec<[String; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    r: String,
    a: String,
}

pub fn parse_system(text: &str) -> Result<CantorSystem> {
    let doc: SetSpecDoc = serde_json::from_str(text).map_err(|e| {
        Error::SpecFile(format!(
            "invalid JSON at line {}, column {}: {}",
            e.line(),
            e.column(),
            e
        ))
    })?;
    build(doc)
}

pub fn load_system(path: &Path) -> Result<CantorSystem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::SpecFile(format!("cannot read {}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| match e {
        Error::SpecFile(msg) => Error::SpecFile(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn interval_from(pair: &[String; 2]) -> Result<Interval> {
    Interval::new(parse_rational(&pair[0])?, parse_rational(&pair[1])?)
}

fn build(doc: SetSpecDoc) -> Result<CantorSystem> {
    match doc.kind.as_str() {
        "self_similar" => {
            let maps = doc
                .maps
                .ok_or_else(|| Error::SpecFile("self_similar needs `maps`".into()))?;
            let pairs = maps
                .iter()
                .map(|m| Ok((parse_rational(&m.r)?, parse_rational(&m.a)?)))
                .collect::<Result<Vec<_>>>()?;
            let system = SelfSimilarSystem::from_ratios_offsets(&pairs)?;
            if let Some(hull) = &doc.hull {
                let declared = interval_from(hull)?;
                if &declared != system.hull() {
                    return Err(Error::SpecFile(format!(
                        "declared hull {declared} does not match the computed hull {}",
                        system.hull()
                    )));
                }
            }
            Ok(system.into())
        }
        "moran_two_branch" => {
            let hull = interval_from(
                doc.hull
                    .as_ref()
                    .ok_or_else(|| Error::SpecFile("moran_two_branch needs `hull`".into()))?,
            )?;
            let get = |field: &Option<String>, name: &str| {
                field
                    .as_ref()
                    .ok_or_else(|| Error::SpecFile(format!("moran_two_branch needs `{name}`")))
                    .and_then(|s| parse_rational(s))
            };
            let left = get(&doc.left, "left")?;
            let right = get(&doc.right, "right")?;
            let s_min = get(&doc.s_min, "s_min")?;
            let kappa = get(&doc.kappa, "kappa")?;
            let rule = match &doc.first_level {
                Some(first) => MoranRule::StagedTwoBranch {
                    first: first
                        .iter()
                        .map(interval_from)
                        .collect::<Result<Vec<_>>>()?,
                    left,
                    right,
                },
                None => MoranRule::TwoBranch { left, right },
            };
            Ok(MoranSystem::new(hull, rule, s_min, kappa)?.into())
        }
        other => Err(Error::SpecFile(format!(
            "unknown set type `{other}` (expected self_similar or moran_two_branch)"
        ))),
    }
}
