//! Presentation files and the family flags shared by the compute subcommands.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use stratakit::algebra::{validate, ArrowDecl, QuiverPresentation, RawPresentation};
use stratakit::FamilyParams;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowRecord {
    pub label: String,
    pub source: String,
    pub target: String,
    #[serde(default)]
    pub degree: i64,
}

/// On-disk form of a presentation. Serialized with keys in this order, arrows in declaration
/// order and relations sorted by arrow index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
    pub relations: Vec<[String; 2]>,
}

impl PresentationFile {
    pub fn from_presentation(p: &QuiverPresentation) -> Self {
        let raw = p.to_raw();
        PresentationFile {
            vertices: raw.vertices,
            arrows: raw
                .arrows
                .into_iter()
                .map(|a| ArrowRecord {
                    label: a.label,
                    source: a.source,
                    target: a.target,
                    degree: a.degree,
                })
                .collect(),
            relations: raw.relations.into_iter().map(|(l, e)| [l, e]).collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<QuiverPresentation> {
        let raw = RawPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDecl::new(&a.label, &a.source, &a.target).with_degree(a.degree))
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|[l, e]| (l.clone(), e.clone()))
                .collect(),
        };
        validate(&raw).map_err(|e| CliError::Input(e.to_string()).into())
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("presentation files serialize")
    }
}

pub fn parse_presentation(text: &str) -> Result<QuiverPresentation> {
    let file: PresentationFile = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("malformed presentation: {e}")))?;
    file.to_presentation()
}

/// Canonical text of a presentation: pretty JSON with a trailing newline.
pub fn serialize_presentation(p: &QuiverPresentation) -> String {
    let mut text = serde_json::to_string_pretty(&PresentationFile::from_presentation(p))
        .expect("serializable");
    text.push('\n');
    text
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    B,
    An,
    Kronecker,
}

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub x: Option<u32>,
    #[arg(long)]
    pub y: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub xs: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub ys: Vec<u64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub degrees: Vec<i64>,
}

impl FamilyArgs {
    pub fn params(&self, kind: FamilyKind) -> Result<FamilyParams> {
        let missing =
            |flag: &str| CliError::Input(format!("family {kind:?} needs --{flag}").to_lowercase());
        Ok(match kind {
            FamilyKind::B => FamilyParams::B {
                x: self.x.ok_or_else(|| missing("x"))?,
                y: self.y.ok_or_else(|| missing("y"))?,
            },
            FamilyKind::An => FamilyParams::An {
                n: self.n.ok_or_else(|| missing("n"))?,
                xs: self.xs.clone(),
                ys: self.ys.clone(),
            },
            FamilyKind::Kronecker => FamilyParams::Lambda {
                degrees: self.degrees.clone(),
            },
        })
    }
}

pub fn build_family(params: &FamilyParams) -> Result<QuiverPresentation> {
    params
        .build()
        .map_err(|e| CliError::Input(e.to_string()).into())
}

pub fn family_value(params: &FamilyParams) -> Value {
    match params {
        FamilyParams::B { x, y } => json!({ "family": "b", "x": x, "y": y }),
        FamilyParams::An { n, xs, ys } => json!({ "family": "an", "n": n, "xs": xs, "ys": ys }),
        FamilyParams::Lambda { degrees } => json!({ "family": "kronecker", "degrees": degrees }),
    }
}

/// Where a compute subcommand takes its algebra from: a presentation file or family flags.
#[derive(Clone, Debug, Default, Args)]
pub struct InputArgs {
    /// Presentation file (JSON)
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[command(flatten)]
    pub params: FamilyArgs,
}

pub struct Input {
    pub presentation: QuiverPresentation,
    pub family: Option<FamilyParams>,
    /// The "input" section of the result document.
    pub value: Value,
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Input> {
        match (&self.input, self.family) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))
                    .map_err(|e| CliError::Input(format!("{e:#}")))?;
                let presentation = parse_presentation(&text)?;
                let value = PresentationFile::from_presentation(&presentation).to_value();
                Ok(Input {
                    presentation,
                    family: None,
                    value: json!({ "presentation": value }),
                })
            }
            (None, Some(kind)) => {
                let params = self.params.params(kind)?;
                let presentation = build_family(&params)?;
                Ok(Input {
                    presentation,
                    value: family_value(&params),
                    family: Some(params),
                })
            }
            (None, None) => bail!(CliError::Input(
                "give either --input FILE or --family".into()
            )),
        }
    }
}
