//! Run configuration in INI form.
//!
//! ```ini
//! [model]
//! kind = poschl-teller      ; or: morse
//! lambda2 = 1.0             ; poschl-teller only
//! a2 = 2.0                  ; morse only
//! b2 = 1.0                  ; morse only
//! sigma = 1.0
//!
//! [swanson]
//! alpha = 0.5
//! beta = 0.25
//!
//! [grid]                    ; optional, all three keys together
//! x_min = -10.0
//! x_max = 10.0
//! n_points = 20001
//!
//! [spectrum]
//! n = 0, 1, 2               ; optional subset of levels
//!
//! [continuum]
//! k = 3.0
//!
//! [scatter]
//! k = 0.5, 1.0, 2.0
//!
//! [oracle]
//! enabled = true
//! x_min = -20.0             ; optional oracle window, all three keys together
//! x_max = 20.0
//! n_points = 4000
//!
//! [output]
//! path = run.json
//! format = json             ; or: csv
//! ```

use std::fmt::Write as _;
use std::path::Path;

use ini::Ini;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{MorseModel, PoschlTellerModel, SuperpotentialModel};
use crate::similarity::SwansonParams;

/// Output encoding of a data file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format `{other}` (csv|json)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModelSpec {
    PoschlTeller { lambda2: f64, sigma: f64 },
    Morse { a2: f64, b2: f64, sigma: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSpec {
    pub enabled: bool,
    pub grid: Option<GridSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub alpha: f64,
    pub beta: f64,
    pub grid: Option<GridSpec>,
    pub spectrum_n: Option<Vec<usize>>,
    pub continuum_k: Option<f64>,
    pub scatter_k: Vec<f64>,
    pub oracle: OracleSpec,
    pub output_path: Option<String>,
    pub output_format: Option<Format>,
}

const SECTIONS: [(&str, &[&str]); 8] = [
    ("model", &["kind", "lambda2", "a2", "b2", "sigma"]),
    ("swanson", &["alpha", "beta"]),
    ("grid", &["x_min", "x_max", "n_points"]),
    ("spectrum", &["n"]),
    ("continuum", &["k"]),
    ("scatter", &["k"]),
    ("oracle", &["enabled", "x_min", "x_max", "n_points"]),
    ("output", &["path", "format"]),
];

struct Section<'a> {
    name: &'a str,
    props: Option<&'a ini::Properties>,
}

impl<'a> Section<'a> {
    fn get(&self, key: &str) -> Option<&'a str> {
        self.props.and_then(|p| p.get(key)).map(str::trim)
    }

    fn float(&self, key: &str) -> Result<Option<f64>> {
        self.get(key).map(|v| parse_float(self.name, key, v)).transpose()
    }

    fn require_float(&self, key: &str) -> Result<f64> {
        self.float(key)?
            .ok_or_else(|| Error::Config(format!("[{}] missing `{key}`", self.name)))
    }

    fn grid(&self) -> Result<Option<GridSpec>> {
        let keys = ["x_min", "x_max", "n_points"];
        let present = keys.iter().filter(|k| self.get(k).is_some()).count();
        match present {
            0 => Ok(None),
            3 => {
                let n = self.get("n_points").unwrap();
                let n_points = n.parse::<usize>().map_err(|_| {
                    Error::Config(format!("[{}] n_points: `{n}` is not a positive integer", self.name))
                })?;
                let grid = GridSpec {
                    x_min: self.require_float("x_min")?,
                    x_max: self.require_float("x_max")?,
                    n_points,
                };
                if grid.x_max <= grid.x_min {
                    return Err(Error::Config(format!("[{}] x_max must exceed x_min", self.name)));
                }
                Ok(Some(grid))
            }
            _ => Err(Error::Config(format!(
                "[{}] x_min, x_max and n_points must be given together",
                self.name
            ))),
        }
    }
}

fn parse_float(section: &str, key: &str, v: &str) -> Result<f64> {
    let x: f64 = v
        .parse()
        .map_err(|_| Error::Config(format!("[{section}] {key}: `{v}` is not a number")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Config(format!("[{section}] {key}: `{v}` is not finite")))
    }
}

fn parse_list<T>(section: &str, key: &str, v: &str, item: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let items: Vec<T> = v
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(item)
        .collect::<Result<_>>()?;
    if items.is_empty() {
        return Err(Error::Config(format!("[{section}] {key}: empty list")));
    }
    Ok(items)
}

fn fmt_list<T: std::fmt::Debug>(items: &[T]) -> String {
    items.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>().join(", ")
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let ini = Ini::load_from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let mut seen: Vec<&str> = Vec::new();
        for (name, props) in ini.iter() {
            let Some(name) = name else {
                if props.iter().next().is_some() {
                    return Err(Error::Config("keys outside any section".into()));
                }
                continue;
            };
            let Some((_, keys)) = SECTIONS.iter().find(|(s, _)| *s == name) else {
                return Err(Error::Config(format!("unknown section [{name}]")));
            };
            if seen.contains(&name) {
                return Err(Error::Config(format!("duplicate section [{name}]")));
            }
            seen.push(name);
            let mut keys_seen: Vec<&str> = Vec::new();
            for (key, _) in props.iter() {
                if !keys.contains(&key) {
                    return Err(Error::Config(format!("unknown key `{key}` in [{name}]")));
                }
                if keys_seen.contains(&key) {
                    return Err(Error::Config(format!("duplicate key `{key}` in [{name}]")));
                }
                keys_seen.push(key);
            }
        }
        let section = |name| Section {
            name,
            props: ini.section(Some(name)),
        };

        let model = section("model");
        let sigma = model.float("sigma")?.unwrap_or(1.0);
        let model_spec = match model.get("kind") {
            Some("poschl-teller") | Some("pt") => {
                if model.get("a2").is_some() || model.get("b2").is_some() {
                    return Err(Error::Config("[model] a2/b2 belong to kind = morse".into()));
                }
                ModelSpec::PoschlTeller {
                    lambda2: model.require_float("lambda2")?,
                    sigma,
                }
            }
            Some("morse") => {
                if model.get("lambda2").is_some() {
                    return Err(Error::Config("[model] lambda2 belongs to kind = poschl-teller".into()));
                }
                ModelSpec::Morse {
                    a2: model.require_float("a2")?,
                    b2: model.require_float("b2")?,
                    sigma,
                }
            }
            Some(other) => {
                return Err(Error::Config(format!(
                    "[model] unknown kind `{other}` (poschl-teller|morse)"
                )))
            }
            None => return Err(Error::Config("[model] missing `kind`".into())),
        };

        let swanson = section("swanson");
        let spectrum = section("spectrum");
        let spectrum_n = spectrum
            .get("n")
            .map(|v| {
                parse_list("spectrum", "n", v, |s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Config(format!("[spectrum] n: `{s}` is not a level index")))
                })
            })
            .transpose()?;
        let continuum_k = section("continuum").float("k")?;
        let scatter_k = section("scatter")
            .get("k")
            .map(|v| parse_list("scatter", "k", v, |s| parse_float("scatter", "k", s)))
            .transpose()?
            .unwrap_or_default();
        let oracle = section("oracle");
        let enabled = match oracle.get("enabled") {
            None | Some("true") => true,
            Some("false") => false,
            Some(other) => {
                return Err(Error::Config(format!("[oracle] enabled: `{other}` (true|false)")))
            }
        };
        let output = section("output");

        Ok(Self {
            model: model_spec,
            alpha: swanson.require_float("alpha")?,
            beta: swanson.require_float("beta")?,
            grid: section("grid").grid()?,
            spectrum_n,
            continuum_k,
            scatter_k,
            oracle: OracleSpec {
                enabled,
                grid: oracle.grid()?,
            },
            output_path: output.get("path").map(str::to_owned),
            output_format: output.get("format").map(Format::parse).transpose()?,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Canonical INI text; `parse(to_ini())` reproduces `self` exactly.
    pub fn to_ini(&self) -> String {
        let mut s = String::new();
        s.push_str("[model]\n");
        match self.model {
            ModelSpec::PoschlTeller { lambda2, sigma } => {
                let _ = writeln!(s, "kind = poschl-teller\nlambda2 = {lambda2:?}\nsigma = {sigma:?}");
            }
            ModelSpec::Morse { a2, b2, sigma } => {
                let _ = writeln!(s, "kind = morse\na2 = {a2:?}\nb2 = {b2:?}\nsigma = {sigma:?}");
            }
        }
        let _ = writeln!(s, "\n[swanson]\nalpha = {:?}\nbeta = {:?}", self.alpha, self.beta);
        let grid = |s: &mut String, g: &GridSpec| {
            let _ = writeln!(s, "x_min = {:?}\nx_max = {:?}\nn_points = {}", g.x_min, g.x_max, g.n_points);
        };
        if let Some(g) = &self.grid {
            s.push_str("\n[grid]\n");
            grid(&mut s, g);
        }
        if let Some(n) = &self.spectrum_n {
            let _ = writeln!(s, "\n[spectrum]\nn = {}", fmt_list(n));
        }
        if let Some(k) = self.continuum_k {
            let _ = writeln!(s, "\n[continuum]\nk = {k:?}");
        }
        if !self.scatter_k.is_empty() {
            let _ = writeln!(s, "\n[scatter]\nk = {}", fmt_list(&self.scatter_k));
        }
        let _ = writeln!(s, "\n[oracle]\nenabled = {}", self.oracle.enabled);
        if let Some(g) = &self.oracle.grid {
            grid(&mut s, g);
        }
        if self.output_path.is_some() || self.output_format.is_some() {
            s.push_str("\n[output]\n");
            if let Some(p) = &self.output_path {
                let _ = writeln!(s, "path = {p}");
            }
            if let Some(f) = self.output_format {
                let _ = writeln!(s, "format = {}", f.as_str());
            }
        }
        s
    }

    pub fn params(&self) -> Result<SwansonParams> {
        SwansonParams::new(self.alpha, self.beta)
    }

    pub fn build_model(&self) -> Result<SuperpotentialModel> {
        let params = self.params()?;
        Ok(match self.model {
            ModelSpec::PoschlTeller { lambda2, sigma } => {
                SuperpotentialModel::PoschlTeller(PoschlTellerModel::new(lambda2, sigma, params)?)
            }
            ModelSpec::Morse { a2, b2, sigma } => {
                SuperpotentialModel::Morse(MorseModel::new(a2, b2, sigma, params)?)
            }
        })
    }
}
