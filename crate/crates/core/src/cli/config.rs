use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::norms::Exponent;
use crate::operator::OperatorMatrix;
use crate::repr::{AffineLattice, FilterPair, Signal, Weight};
use crate::schur::{CertDirection, CertificationSpec};
use crate::transforms::{normalize_frame, periodized_gaussian, FrameSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Representation {
    WeylHeisenberg,
    Affine,
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wh" | "weyl-heisenberg" | "gabor" => Ok(Representation::WeylHeisenberg),
            "affine" | "wavelet" => Ok(Representation::Affine),
            other => Err(Error::Config(format!("unknown representation '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "path", rename_all = "kebab-case")]
pub enum WindowSource {
    Gaussian,
    Delta,
    Haar,
    Daubechies4,
    /// A signal file for Gabor frames, a low-pass filter file for wavelets.
    File(String),
}

impl FromStr for WindowSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gaussian" => WindowSource::Gaussian,
            "delta" => WindowSource::Delta,
            "haar" => WindowSource::Haar,
            "daubechies4" | "db4" => WindowSource::Daubechies4,
            "" => return Err(Error::Config("empty window path".into())),
            path => WindowSource::File(path.to_string()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "path", rename_all = "kebab-case")]
pub enum OperatorSource {
    Identity,
    Zero,
    Random,
    RankOne,
    File(String),
}

impl FromStr for OperatorSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "identity" => OperatorSource::Identity,
            "zero" => OperatorSource::Zero,
            "random" => OperatorSource::Random,
            "rank-one" => OperatorSource::RankOne,
            "" => return Err(Error::Config("empty operator path".into())),
            path => OperatorSource::File(path.to_string()),
        })
    }
}

/// Run configuration, echoed verbatim into every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub n: usize,
    pub levels: Option<usize>,
    pub representation1: Representation,
    pub representation2: Representation,
    pub window1: WindowSource,
    pub window2: WindowSource,
    pub weight1: Weight,
    pub weight2: Weight,
    pub direction: CertDirection,
    pub p: Exponent,
    pub sigma: Option<f64>,
    pub operator: OperatorSource,
    pub signal: Option<String>,
    pub out: Option<String>,
    pub seed: u64,
    pub timing: bool,
    pub inject_nan: bool,
}

pub const KEYS: &[&str] = &[
    "n",
    "levels",
    "representation1",
    "representation2",
    "window1",
    "window2",
    "weight1",
    "weight2",
    "s1",
    "s2",
    "direction",
    "p",
    "sigma",
    "operator",
    "signal",
    "out",
    "seed",
    "timing",
    "inject_nan",
];

/// Reads `key=value` lines; `#` starts a comment line.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i + 1,
            column: 1,
            message: format!("expected key=value, found '{line}'"),
        })?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Config(format!("unknown key '{key}' on line {}", i + 1)));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_config_text(&text)
}

fn parse<T: FromStr>(map: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
    map.get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| Error::Config(format!("invalid value '{v}' for {key}")))
        })
        .transpose()
}

fn parse_bool(map: &BTreeMap<String, String>, key: &str) -> Result<bool> {
    match map.get(key).map(String::as_str) {
        None | Some("false") | Some("0") => Ok(false),
        Some("true") | Some("1") => Ok(true),
        Some(v) => Err(Error::Config(format!("invalid value '{v}' for {key}"))),
    }
}

fn weight(family: Option<&String>, s: f64, rep: Representation) -> Result<Weight> {
    let default = match rep {
        Representation::WeylHeisenberg => "polynomial",
        Representation::Affine => "dyadic",
    };
    match family.map(String::as_str).unwrap_or(default) {
        "constant" => Ok(Weight::Constant),
        "polynomial" | "polynomial_tf" => Ok(Weight::PolynomialTf(s)),
        "dyadic" => Ok(Weight::Dyadic(s)),
        other => Err(Error::Config(format!("unknown weight family '{other}'"))),
    }
}

impl Config {
    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Config> {
        for key in map.keys() {
            if !KEYS.contains(&key.as_str()) {
                return Err(Error::Config(format!("unknown key '{key}'")));
            }
        }
        let representation1 = parse(map, "representation1")?.unwrap_or(Representation::WeylHeisenberg);
        let representation2 = parse(map, "representation2")?.unwrap_or(representation1);
        let default_window = |rep| match rep {
            Representation::WeylHeisenberg => WindowSource::Gaussian,
            Representation::Affine => WindowSource::Haar,
        };
        let s1 = parse(map, "s1")?.unwrap_or(0.0);
        let s2 = parse(map, "s2")?.unwrap_or(0.0);
        let p: Exponent = match map.get("p") {
            Some(v) => v.parse()?,
            None => Exponent::ONE,
        };
        let config = Config {
            n: parse(map, "n")?.unwrap_or(16),
            levels: parse(map, "levels")?,
            representation1,
            representation2,
            window1: parse(map, "window1")?.unwrap_or(default_window(representation1)),
            window2: parse(map, "window2")?.unwrap_or(default_window(representation2)),
            weight1: weight(map.get("weight1"), s1, representation1)?,
            weight2: weight(map.get("weight2"), s2, representation2)?,
            direction: match map.get("direction") {
                Some(v) => v.parse()?,
                None => CertDirection::OneToP,
            },
            p,
            sigma: parse(map, "sigma")?,
            operator: parse(map, "operator")?.unwrap_or(OperatorSource::Identity),
            signal: map.get("signal").cloned(),
            out: map.get("out").cloned(),
            seed: parse(map, "seed")?.unwrap_or(0),
            timing: parse_bool(map, "timing")?,
            inject_nan: parse_bool(map, "inject_nan")?,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("n must be positive".into()));
        }
        let affine = [self.representation1, self.representation2].contains(&Representation::Affine);
        if affine && (self.n < 4 || !self.n.is_power_of_two()) {
            return Err(Error::Config(format!(
                "affine representations need N a power of two >= 4, got {}",
                self.n
            )));
        }
        if let Some(sigma) = self.sigma {
            if !(sigma >= 0.0) {
                return Err(Error::Config(format!("sigma must be non-negative, got {sigma}")));
            }
        }
        Ok(())
    }

    pub fn frame(&self, which: usize) -> Result<FrameSpec> {
        let (rep, window) = match which {
            1 => (self.representation1, &self.window1),
            _ => (self.representation2, &self.window2),
        };
        match rep {
            Representation::WeylHeisenberg => {
                let psi = match window {
                    WindowSource::Gaussian => periodized_gaussian(self.n)?,
                    WindowSource::Delta => Signal::delta(self.n, 0)?,
                    WindowSource::File(path) => {
                        let psi = crate::io::read_signal(Path::new(path))?;
                        psi.expect_len(self.n)?;
                        psi
                    }
                    other => {
                        return Err(Error::Config(format!("window {other:?} needs an affine representation")))
                    }
                };
                let psi = if self.inject_nan {
                    let mut v = psi.into_values();
                    v[0].re = f64::NAN;
                    Signal::from_vec_unchecked(v)
                } else {
                    psi
                };
                if psi.values().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                    return Err(Error::NonFinite);
                }
                FrameSpec::parseval_gabor(psi)
            }
            Representation::Affine => {
                let filters = match window {
                    WindowSource::Haar => FilterPair::haar(),
                    WindowSource::Daubechies4 => FilterPair::daubechies4(),
                    WindowSource::File(path) => {
                        let low = crate::io::read_signal(Path::new(path))?;
                        if low.values().iter().any(|z| z.im != 0.0) {
                            return Err(Error::InvalidFilter("filter taps must be real".into()));
                        }
                        FilterPair::from_low_pass(path, low.values().iter().map(|z| z.re).collect())?
                    }
                    other => {
                        return Err(Error::Config(format!("window {other:?} needs a Weyl-Heisenberg representation")))
                    }
                };
                let lattice = match self.levels {
                    Some(levels) => AffineLattice::new(self.n, levels)?,
                    None => AffineLattice::standard(self.n)?,
                };
                let frame = FrameSpec::wavelet(filters, lattice)?;
                if self.inject_nan {
                    return Err(Error::NonFinite);
                }
                normalize_frame(&frame)
            }
        }
    }

    pub fn operator(&self) -> Result<OperatorMatrix> {
        let n = self.n;
        let a = match &self.operator {
            OperatorSource::Identity => OperatorMatrix::identity(n),
            OperatorSource::Zero => OperatorMatrix::zeros(n, n),
            OperatorSource::Random => crate::random::operator(n, n, self.seed),
            OperatorSource::RankOne => OperatorMatrix::rank_one(
                &crate::random::signal(n, self.seed),
                &crate::random::signal(n, self.seed.wrapping_add(1)),
            ),
            OperatorSource::File(path) => crate::io::read_operator(Path::new(path))?,
        };
        a.expect_shape(n, n)?;
        Ok(a)
    }

    pub fn certification(&self) -> Result<CertificationSpec> {
        let mut spec = CertificationSpec::new(
            self.direction,
            self.p,
            self.weight1,
            self.weight2,
            self.frame(1)?,
            self.frame(2)?,
        )
        .with_seed(self.seed);
        spec.sigma = self.sigma;
        Ok(spec)
    }

    pub fn out_path(&self) -> Option<PathBuf> {
        self.out.as_ref().map(PathBuf::from)
    }
}
