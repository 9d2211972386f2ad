//! Run configuration: a flat TOML file plus flag overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::engines::{EngineVariant, Generalizer};
use crate::error::{Error, Result};
use crate::families::{ChainFamily, DiagonalFamily, Family, GoldFamily, RectangleFamily};
use crate::program::{GoldVariant, Index, RectBounds};
use crate::trace::Schedule;
use crate::verifiers::CexStrategy;
use crate::Example;

/// Everything `run` needs. Unset optional keys fall back to family
/// defaults.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub family: String,
    /// Family-specific target syntax, see [`RunConfig::target_index`].
    pub target: String,
    pub engine: String,
    /// Defaults to the family's own generalizer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generalizer: Option<String>,
    pub strategy: String,
    pub seed: u64,
    /// Codes the consistent-avoiding strategy never returns.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub avoid: Vec<Example>,
    pub schedule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    /// Chain, diagonal and gold only; rectangles are sized by `grid`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub universe_bound: Option<Example>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            family: "chain".into(),
            target: "5".into(),
            engine: "cegis".into(),
            generalizer: None,
            strategy: "first-found".into(),
            seed: 0,
            avoid: Vec::new(),
            schedule: "canonical".into(),
            budget: None,
            universe_bound: None,
            grid: None,
            window: None,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("run configs serialize")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn family(&self) -> Result<Family> {
        let ub = self.universe_bound;
        if self.family != "rectangle" && self.grid.is_some() {
            return Err(Error::Config(
                "grid applies to the rectangle family only".into(),
            ));
        }
        match self.family.as_str() {
            "chain" => {
                let max = match ub {
                    None => ChainFamily::DEFAULT_MAX_INDEX,
                    Some(b) if b >= 2 => b - 2,
                    Some(b) => {
                        return Err(Error::Config(format!(
                            "chain universe bound {b} must be at least 2"
                        )))
                    }
                };
                Ok(Family::Chain(ChainFamily::new(max)))
            }
            "rectangle" => {
                if ub.is_some() {
                    return Err(Error::Config(
                        "rectangle universes are set by grid, not universe_bound".into(),
                    ));
                }
                Ok(Family::Rectangle(RectangleFamily::new(
                    self.grid.unwrap_or(RectangleFamily::DEFAULT_GRID),
                )?))
            }
            "diagonal" => Ok(Family::Diagonal(DiagonalFamily::new(
                ub.unwrap_or(DiagonalFamily::DEFAULT_BOUND),
            ))),
            "gold" => Ok(Family::Gold(GoldFamily::new(
                ub.unwrap_or(GoldFamily::DEFAULT_BOUND),
            ))),
            other => Err(Error::Config(format!(
                "unknown family {other:?}; expected one of {}",
                Family::NAMES.join(", ")
            ))),
        }
    }

    /// Parses the target:
    /// chain `5`; rectangle `x_lo,x_hi,y_lo,y_hi` or `universal`;
    /// diagonal `diag:3` (or `3`) or a JSON array of `[j,n]` pairs;
    /// gold `full` or `minus:17`.
    pub fn target_index(&self, family: &Family) -> Result<Index> {
        let t = self.target.trim();
        let bad = |why: &str| Error::Config(format!("bad {} target {t:?}: {why}", family.name()));
        let index = match family {
            Family::Chain(_) => Index::Chain(t.parse().map_err(|_| bad("expected an index"))?),
            Family::Rectangle(f) if t == "universal" => Index::Rect(f.universal()),
            Family::Rectangle(_) => {
                let v: Vec<i64> = t
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad("expected four integers"))?;
                let [x_lo, x_hi, y_lo, y_hi] = v[..] else {
                    return Err(bad("expected four integers"));
                };
                Index::Rect(RectBounds::new(x_lo, x_hi, y_lo, y_hi))
            }
            Family::Diagonal(f) if t.starts_with('[') => {
                let pairs: Vec<(u64, u64)> =
                    serde_json::from_str(t).map_err(|e| bad(&e.to_string()))?;
                f.fin_index(&pairs)?
            }
            Family::Diagonal(_) => Index::Diag(
                t.strip_prefix("diag:")
                    .unwrap_or(t)
                    .parse()
                    .map_err(|_| bad("expected diag:<i> or [[j,n],...]"))?,
            ),
            Family::Gold(_) if t == "full" => Index::Gold(GoldVariant::Full),
            Family::Gold(_) => Index::Gold(GoldVariant::Minus(
                t.strip_prefix("minus:")
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("expected full or minus:<i>"))?,
            )),
        };
        family.language(&index)?;
        Ok(index)
    }

    pub fn engine(&self) -> Result<EngineVariant> {
        EngineVariant::parse(&self.engine)
    }

    pub fn generalizer(&self, family: &Family) -> Result<Generalizer> {
        match &self.generalizer {
            None => Ok(Generalizer::for_family(family)),
            Some(name) => Generalizer::from_name(name, family),
        }
    }

    pub fn strategy(&self) -> Result<CexStrategy> {
        CexStrategy::from_parts(&self.strategy, self.seed, &self.avoid)
    }

    pub fn schedule(&self) -> Result<Schedule> {
        Schedule::parse(&self.schedule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with(family: &str, target: &str) -> RunConfig {
        RunConfig {
            family: family.into(),
            target: target.into(),
            ..RunConfig::default()
        }
    }

    #[test]
    fn targets_parse() {
        let cases = [
            ("chain", "7", "L_7"),
            ("rectangle", "-1,1,-1,1", "rect[-1,1]x[-1,1]"),
            ("rectangle", "universal", "rect[-32,32]x[-32,32]"),
            ("diagonal", "diag:3", "diag(3)"),
            ("diagonal", "4", "diag(4)"),
            ("diagonal", "[[0,2],[1,7]]", "{5,43}"),
            ("gold", "full", "V*"),
            ("gold", "minus:17", "V*-{17}"),
        ];
        for (family, target, shown) in cases {
            let c = with(family, target);
            let f = c.family().unwrap();
            assert_eq!(
                c.target_index(&f).unwrap().to_string(),
                shown,
                "{family} {target}"
            );
        }
    }

    #[test]
    fn bad_inputs_are_config_errors() {
        assert!(matches!(
            with("nosuch", "1").family(),
            Err(Error::Config(_))
        ));
        let c = with("chain", "x");
        assert!(c.target_index(&c.family().unwrap()).is_err());
        let c = with("chain", "40");
        assert!(c.target_index(&c.family().unwrap()).is_err());
        let c = with("rectangle", "1,2,3");
        assert!(c.target_index(&c.family().unwrap()).is_err());
        let c = RunConfig {
            universe_bound: Some(100),
            ..with("rectangle", "universal")
        };
        assert!(c.family().is_err());
        assert!(RunConfig::from_toml("colour = \"red\"").is_err());
    }

    #[test]
    fn universe_bound_sizes_the_family() {
        let c = RunConfig {
            universe_bound: Some(12),
            ..with("chain", "3")
        };
        assert_eq!(c.family().unwrap().universe_bound(), 12);
        let c = RunConfig {
            universe_bound: Some(90),
            ..with("gold", "full")
        };
        assert_eq!(c.family().unwrap().universe_bound(), 90);
    }

    #[test]
    fn toml_round_trip() {
        let c = RunConfig {
            generalizer: Some("chain".into()),
            avoid: vec![3, 9],
            budget: Some(40),
            window: Some(6),
            out: Some("logs/a".into()),
            ..RunConfig::default()
        };
        assert_eq!(RunConfig::from_toml(&c.to_toml()).unwrap(), c);
        assert_eq!(RunConfig::from_toml("").unwrap(), RunConfig::default());
    }
}
