use serde::{Deserialize, Serialize};

use super::ModError;
use crate::scalars::{parse_scalar, Params, ToralScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    GwaWeight,
    HighestWeight,
    Sl2Lq1Example,
    /// Built directly from generator tables.
    Table,
}

impl ModuleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModuleKind::GwaWeight => "gwa-weight",
            ModuleKind::HighestWeight => "highest-weight",
            ModuleKind::Sl2Lq1Example => "sl2-lq1-example",
            ModuleKind::Table => "table",
        }
    }
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    kind: ModuleKind,
    n: usize,
    #[serde(default)]
    omega: Option<Vec<String>>,
    #[serde(default)]
    lambda: Option<Vec<String>>,
    #[serde(default)]
    params: Vec<String>,
    radius: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub kind: ModuleKind,
    pub n: usize,
    pub omega: Option<Vec<ToralScalar>>,
    pub lambda: Option<Vec<ToralScalar>>,
    pub params: Params,
    pub radius: i32,
}

fn toral_list(xs: &[String], params: &Params, what: &str) -> Result<Vec<ToralScalar>, ModError> {
    xs.iter()
        .map(|s| {
            let v = parse_scalar(s, params).map_err(|e| ModError::Spec(format!("{what} entry '{s}': {e}")))?;
            if v.is_zero() {
                return Err(ModError::Spec(format!("{what} entry '{s}' is zero")));
            }
            v.as_toral().ok_or_else(|| ModError::Spec(format!("{what} entry '{s}' is not of the form +-q^a c^b")))
        })
        .collect()
}

impl ModuleSpec {
    pub fn gwa(n: usize, omega: Vec<ToralScalar>, params: Params, radius: i32) -> Self {
        ModuleSpec { kind: ModuleKind::GwaWeight, n, omega: Some(omega), lambda: None, params, radius }
    }

    pub fn highest_weight(n: usize, lambda: Vec<ToralScalar>, params: Params, radius: i32) -> Self {
        ModuleSpec { kind: ModuleKind::HighestWeight, n, omega: None, lambda: Some(lambda), params, radius }
    }

    pub fn from_json(text: &str) -> Result<Self, ModError> {
        let f: SpecFile = serde_json::from_str(text).map_err(|e| ModError::Spec(e.to_string()))?;
        let params = Params::from_names(&f.params).map_err(|e| ModError::Spec(e.to_string()))?;
        if f.n == 0 {
            return Err(ModError::Spec("n must be at least 1".into()));
        }
        if f.radius < 1 {
            return Err(ModError::Spec("radius must be positive".into()));
        }
        let omega = f.omega.as_deref().map(|xs| toral_list(xs, &params, "omega")).transpose()?;
        let lambda = f.lambda.as_deref().map(|xs| toral_list(xs, &params, "lambda")).transpose()?;
        match f.kind {
            ModuleKind::GwaWeight => match &omega {
                Some(o) if o.len() == f.n + 1 => {}
                Some(o) => return Err(ModError::Spec(format!("omega needs {} entries, got {}", f.n + 1, o.len()))),
                None => return Err(ModError::Spec("gwa-weight needs omega".into())),
            },
            ModuleKind::HighestWeight => match &lambda {
                Some(l) if l.len() == f.n => {}
                Some(l) => return Err(ModError::Spec(format!("lambda needs {} entries, got {}", f.n, l.len()))),
                None => return Err(ModError::Spec("highest-weight needs lambda".into())),
            },
            ModuleKind::Sl2Lq1Example => {
                if f.n != 1 {
                    return Err(ModError::Spec("sl2-lq1-example has n = 1".into()));
                }
            }
            ModuleKind::Table => return Err(ModError::Spec("kind 'table' cannot be given in a spec".into())),
        }
        Ok(ModuleSpec { kind: f.kind, n: f.n, omega, lambda, params, radius: f.radius })
    }

    pub fn to_json(&self) -> String {
        let lit = |v: &Option<Vec<ToralScalar>>| v.as_ref().map(|xs| xs.iter().map(|t| t.to_string()).collect());
        let f = SpecFile {
            kind: self.kind,
            n: self.n,
            omega: lit(&self.omega),
            lambda: lit(&self.lambda),
            params: (1..=self.params.count()).map(|i| format!("c{i}")).collect(),
            radius: self.radius,
        };
        serde_json::to_string_pretty(&f).expect("spec serializes")
    }
}
