use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::torus::{teich_from_xy, Branch, TracePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub base: TracePoint,
    pub depth: u32,
    pub tol: f64,
    /// `None` lets each command pick its natural format.
    pub format: Option<Format>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            base: TracePoint::modular(),
            depth: 2000,
            tol: 1e-8,
            format: None,
            seed: 42,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.depth < 1 || self.depth > crate::torus::MAX_DEPTH {
            return Err(Error::contract(format!(
                "depth {} outside 1..={}",
                self.depth,
                crate::torus::MAX_DEPTH
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::contract(format!(
                "tolerance {} must be > 0",
                self.tol
            )));
        }
        Ok(())
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    /// Applies `key = value` lines (`base`, `depth`, `tol`, `format`, `seed`);
    /// `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key = value", i + 1))
            })?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        self.apply_text(&std::fs::read_to_string(path)?)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::Parse(format!("bad {what} {value:?}"));
        match key {
            "base" => self.base = parse_point(value)?,
            "depth" => self.depth = value.parse().map_err(|_| bad("depth"))?,
            "tol" => self.tol = value.parse().map_err(|_| bad("tolerance"))?,
            "format" => self.format = Some(value.parse()?),
            "seed" => self.seed = value.parse().map_err(|_| bad("seed"))?,
            other => return Err(Error::Parse(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }
}

fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(s.to_owned()),
    }
}

/// Reads a JSON argument given inline, as `@path`, or as a bare path.
pub fn read_json_arg(s: &str) -> Result<String> {
    let t = s.trim_start();
    if t.starts_with('{') || t.starts_with('[') || t.starts_with('@') {
        read_arg(t)
    } else {
        Ok(std::fs::read_to_string(s)?)
    }
}

/// A point as JSON `{"x":…,"y":…,"z":…}` (inline or `@file`), a trace triple
/// `x,y,z`, or a chart coordinate `x,y,plus|minus`.
pub fn parse_point(s: &str) -> Result<TracePoint> {
    let text = read_arg(s.trim())?;
    let t = text.trim();
    if t.starts_with('{') {
        return Ok(serde_json::from_str(t)?);
    }
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    let num = |p: &str| -> Result<f64> {
        p.parse()
            .map_err(|_| Error::Parse(format!("not a number: {p:?}")))
    };
    match parts.as_slice() {
        [x, y, "plus"] => teich_from_xy(num(x)?, num(y)?, Branch::Plus),
        [x, y, "minus"] => teich_from_xy(num(x)?, num(y)?, Branch::Minus),
        [x, y, z] => TracePoint::new(num(x)?, num(y)?, num(z)?),
        _ => Err(Error::Parse(format!("cannot read a point from {t:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points() {
        assert_eq!(parse_point("3,3,3").unwrap(), TracePoint::modular());
        let p = parse_point("3, 3, plus").unwrap();
        assert!((p.z() - 6.0).abs() < 1e-12);
        let j = parse_point(r#"{"x":3,"y":3,"z":3}"#).unwrap();
        assert_eq!(j, TracePoint::modular());
        assert!(parse_point("1,1,minus").is_err());
        assert!(parse_point("a,b").is_err());
    }

    #[test]
    fn config_text() {
        let mut c = RunConfig::default();
        c.apply_text(
            "# defaults\ndepth = 500\ntol=1e-6\nformat = csv\nseed = 7\nbase = 3,3,plus\n",
        )
        .unwrap();
        assert_eq!(c.depth, 500);
        assert_eq!(c.tol, 1e-6);
        assert_eq!(c.format, Some(Format::Csv));
        assert_eq!(c.seed, 7);
        assert!((c.base.z() - 6.0).abs() < 1e-12);
        assert!(c.apply_text("colour = blue").is_err());
        assert!(c.apply_text("depth").is_err());
        c.depth = 0;
        assert!(c.validate().is_err());
    }
}
