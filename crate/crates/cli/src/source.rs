use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use conjq_core::group::{parse_group_file, survey_catalog, CatalogSpec};
use conjq_core::FiniteGroup;

use crate::CliError;

/// Where a group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Catalog(CatalogSpec),
    File(PathBuf),
}

impl GroupSource {
    pub fn load(&self, bound: usize) -> Result<FiniteGroup, CliError> {
        match self {
            GroupSource::Catalog(spec) => Ok(spec.build(bound)?),
            GroupSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
                let name = path.display().to_string();
                parse_group_file(&text, &name, bound)
                    .map_err(|e| CliError::Input(format!("{name}: {e}")))
            }
        }
    }
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSource::Catalog(spec) => write!(f, "{spec}"),
            GroupSource::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

/// A survey source before expansion: a concrete spec, a whole family up to
/// the order cap, the standard catalog, or a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurveySource {
    Standard,
    Family(String),
    Group(GroupSource),
}

const FAMILIES: [&str; 4] = ["cyclic", "dihedral", "symmetric", "alternating"];

impl FromStr for SurveySource {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "standard" {
            return Ok(SurveySource::Standard);
        }
        if FAMILIES.contains(&s) {
            return Ok(SurveySource::Family(s.to_string()));
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(SurveySource::Group(GroupSource::File(path.into())));
        }
        Ok(SurveySource::Group(GroupSource::Catalog(s.parse()?)))
    }
}

impl SurveySource {
    /// Concrete groups in this source with order at most `max_order`.
    /// Files are always included; their order is checked after loading.
    pub fn expand(&self, max_order: usize) -> Vec<GroupSource> {
        let within = |spec: &CatalogSpec| spec.order().is_some_and(|o| o <= max_order as u128);
        match self {
            SurveySource::Standard => survey_catalog(max_order)
                .into_iter()
                .map(GroupSource::Catalog)
                .collect(),
            SurveySource::Family(family) => {
                let make: fn(usize) -> CatalogSpec = match family.as_str() {
                    "cyclic" => CatalogSpec::Cyclic,
                    "dihedral" => |n| CatalogSpec::Dihedral(2 * n),
                    "symmetric" => CatalogSpec::Symmetric,
                    _ => CatalogSpec::Alternating,
                };
                let start = if family == "dihedral" { 3 } else { 1 };
                (start..)
                    .map(make)
                    .take_while(within)
                    .map(GroupSource::Catalog)
                    .collect()
            }
            SurveySource::Group(GroupSource::Catalog(spec)) if !within(spec) => Vec::new(),
            SurveySource::Group(source) => vec![source.clone()],
        }
    }
}

/// `SOURCE@ELEMENT`, where `SOURCE` is a catalog spec or `file:PATH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleSpec {
    pub source: GroupSource,
    pub element: String,
}

impl FromStr for QuandleSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (source, element) = s
            .split_once('@')
            .ok_or_else(|| CliError::Usage(format!("expected SOURCE@ELEMENT, got `{s}`")))?;
        let source = match source.trim().strip_prefix("file:") {
            Some(path) => GroupSource::File(path.into()),
            None => GroupSource::Catalog(source.trim().parse()?),
        };
        Ok(QuandleSpec {
            source,
            element: element.trim().to_string(),
        })
    }
}
