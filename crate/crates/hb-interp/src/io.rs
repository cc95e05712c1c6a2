//! JSON representations of the domain objects and the report types emitted
//! by the CLI. Complex numbers serialize as `[re, im]` pairs; polynomials as
//! ascending coefficient arrays.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disk::{BlaschkeProduct, DiskSequence, UnitCirclePoint};
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::random::{AngleLaw, RadiiFamily, SequenceFamily};
use crate::rational::{BoundaryZeroSet, RationalFn, RationalPair};
use crate::space::AnalyticSeries;

pub fn c2a(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

pub fn a2c(a: [f64; 2]) -> Complex64 {
    Complex64::new(a[0], a[1])
}

pub fn poly_to_json(p: &ComplexPoly) -> Vec<[f64; 2]> {
    p.coeffs().iter().map(|&c| c2a(c)).collect()
}

pub fn poly_from_json(v: &[[f64; 2]]) -> ComplexPoly {
    ComplexPoly::from_coeffs(v.iter().map(|&a| a2c(a)).collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: Vec<[f64; 2]>,
    #[serde(default = "default_den")]
    pub den: Vec<[f64; 2]>,
}

fn default_den() -> Vec<[f64; 2]> {
    vec![[1.0, 0.0]]
}

impl RationalRepr {
    pub fn from_fn(f: &RationalFn) -> Self {
        RationalRepr {
            num: poly_to_json(f.num()),
            den: poly_to_json(f.den()),
        }
    }

    pub fn to_fn(&self) -> Result<RationalFn> {
        RationalFn::new(poly_from_json(&self.num), poly_from_json(&self.den))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZeroRepr {
    pub zeta: [f64; 2],
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairRepr {
    pub b: RationalRepr,
    pub a: RationalRepr,
    pub zeros: Vec<ZeroRepr>,
    #[serde(rename = "N")]
    pub n_total: usize,
    #[serde(rename = "M")]
    pub m_max: usize,
}

impl PairRepr {
    pub fn from_pair(p: &RationalPair) -> Self {
        PairRepr {
            b: RationalRepr::from_fn(p.b()),
            a: RationalRepr::from_fn(p.a()),
            zeros: p
                .zeros()
                .zeros()
                .iter()
                .map(|(z, m)| ZeroRepr {
                    zeta: c2a(z.value()),
                    multiplicity: *m,
                })
                .collect(),
            n_total: p.n_total(),
            m_max: p.m_max(),
        }
    }

    pub fn to_pair(&self) -> Result<RationalPair> {
        let zeros = BoundaryZeroSet::new(
            self.zeros
                .iter()
                .map(|z| Ok((UnitCirclePoint::new(a2c(z.zeta))?, z.multiplicity)))
                .collect::<Result<Vec<_>>>()?,
        )?;
        RationalPair::new(self.b.to_fn()?, self.a.to_fn()?, zeros)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnglesRepr {
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyRepr {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<AnglesRepr>,
}

impl FamilyRepr {
    pub fn to_radii(&self) -> Result<RadiiFamily> {
        let count = self.count.or(self.radii.as_ref().map(|r| r.len())).ok_or_else(|| {
            Error::InvalidInput("family needs a count (or explicit radii)".into())
        })?;
        match self.kind.as_str() {
            "power" => RadiiFamily::power(
                self.c.ok_or_else(|| Error::InvalidInput("power family needs c".into()))?,
                self.beta
                    .ok_or_else(|| Error::InvalidInput("power family needs beta".into()))?,
                count,
            ),
            "geometric" => RadiiFamily::geometric(
                self.c
                    .ok_or_else(|| Error::InvalidInput("geometric family needs c".into()))?,
                self.q.ok_or_else(|| Error::InvalidInput("geometric family needs q".into()))?,
                count,
            ),
            "explicit" => {
                let radii = self
                    .radii
                    .clone()
                    .ok_or_else(|| Error::InvalidInput("explicit family needs radii".into()))?;
                RadiiFamily::explicit(radii[..count.min(radii.len())].to_vec())
            }
            other => Err(Error::InvalidInput(format!("unknown family kind {other}"))),
        }
    }

    pub fn to_family(&self) -> Result<SequenceFamily> {
        let radii = self.to_radii()?;
        let angles = match &self.angles {
            None => AngleLaw::Steinhaus { seed: 0 },
            Some(a) => match a.mode.as_str() {
                "steinhaus" => AngleLaw::Steinhaus {
                    seed: a.seed.unwrap_or(0),
                },
                "fixed" => AngleLaw::Fixed(a.values.clone().unwrap_or_else(|| vec![0.0])),
                other => {
                    return Err(Error::InvalidInput(format!("unknown angle mode {other}")))
                }
            },
        };
        Ok(SequenceFamily { radii, angles })
    }

    pub fn from_family(f: &SequenceFamily) -> Self {
        let (kind, c, beta, q, radii) = match f.radii.kind() {
            crate::random::RadiiKind::Power { c, beta } => {
                ("power".to_string(), Some(*c), Some(*beta), None, None)
            }
            crate::random::RadiiKind::Geometric { c, q } => {
                ("geometric".to_string(), Some(*c), None, Some(*q), None)
            }
            crate::random::RadiiKind::Explicit(r) => {
                ("explicit".to_string(), None, None, None, Some(r.clone()))
            }
        };
        let angles = match &f.angles {
            AngleLaw::Steinhaus { seed } => AnglesRepr {
                mode: "steinhaus".into(),
                seed: Some(*seed),
                values: None,
            },
            AngleLaw::Fixed(values) => AnglesRepr {
                mode: "fixed".into(),
                seed: None,
                values: Some(values.clone()),
            },
        };
        FamilyRepr {
            kind,
            c,
            beta,
            q,
            radii,
            count: Some(f.radii.count()),
            angles: Some(angles),
        }
    }
}

/// Sequence file: explicit points or a parametric family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeqRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyRepr>,
}

impl SeqRepr {
    pub fn to_sequence(&self) -> Result<DiskSequence> {
        match (&self.points, &self.family) {
            (Some(points), None) => {
                DiskSequence::from_values(&points.iter().map(|&p| a2c(p)).collect::<Vec<_>>())
            }
            (None, Some(f)) => f.to_family()?.generate(),
            _ => Err(Error::InvalidInput(
                "sequence file needs exactly one of `points` or `family`".into(),
            )),
        }
    }

    pub fn from_sequence(seq: &DiskSequence) -> Self {
        match seq.provenance() {
            crate::disk::Provenance::Family(f) => SeqRepr {
                points: None,
                family: Some(FamilyRepr::from_family(f)),
            },
            crate::disk::Provenance::Explicit => SeqRepr {
                points: Some(seq.values().iter().map(|&v| c2a(v)).collect()),
                family: None,
            },
        }
    }
}

/// Function file for the Dirichlet-norm and membership commands.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionRepr {
    Poly {
        coeffs: Vec<[f64; 2]>,
    },
    Rational {
        num: Vec<[f64; 2]>,
        #[serde(default = "default_den")]
        den: Vec<[f64; 2]>,
    },
    Blaschke {
        zeros: Vec<[f64; 2]>,
    },
}

impl FunctionRepr {
    pub fn to_series(&self) -> Result<AnalyticSeries> {
        match self {
            FunctionRepr::Poly { coeffs } => {
                Ok(AnalyticSeries::from_poly(poly_from_json(coeffs)))
            }
            FunctionRepr::Rational { num, den } => {
                let f = RationalFn::new(poly_from_json(num), poly_from_json(den))?;
                AnalyticSeries::from_rational(&f)
            }
            FunctionRepr::Blaschke { zeros } => {
                let seq = DiskSequence::from_values(
                    &zeros.iter().map(|&z| a2c(z)).collect::<Vec<_>>(),
                )?;
                AnalyticSeries::from_blaschke(&BlaschkeProduct::new(seq))
            }
        }
    }
}

/// Nevanlinna-Pick problem file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NpProblemRepr {
    pub nodes: Vec<[f64; 2]>,
    pub targets: Vec<[f64; 2]>,
}

/// Target values file for the multiplier construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValuesRepr {
    pub values: Vec<[f64; 2]>,
}
