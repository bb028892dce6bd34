//! JSON documents: graphs in, graphs and reports out.
//!
//! Big integers travel as decimal strings so consumers never overflow.

use serde::{Deserialize, Serialize};
use voltage_tower_core::{DirectedMultigraph, IwasawaInvariants, TowerReport};

pub const GRAPH_SCHEMA: &str = "voltage-tower/graph-v1";
pub const INVARIANTS_SCHEMA: &str = "voltage-tower/invariants-v1";
pub const TOWER_REPORT_SCHEMA: &str = "voltage-tower/tower-report-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema: String,
    pub name: String,
    pub directed: bool,
    pub vertex_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &DirectedMultigraph) -> Self {
        Self {
            schema: GRAPH_SCHEMA.to_string(),
            name: g.name().unwrap_or("graph").to_string(),
            directed: g.is_directed(),
            vertex_count: g.vertex_count(),
            labels: g.labels().map(<[String]>::to_vec),
            edges: g.edges().iter().map(|&(s, t)| [s, t]).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: Self = serde_json::from_str(text).map_err(|e| format!("not a graph document: {e}"))?;
        if doc.schema != GRAPH_SCHEMA {
            return Err(format!("unsupported schema {:?}, expected {GRAPH_SCHEMA:?}", doc.schema));
        }
        Ok(doc)
    }

    pub fn to_graph(&self) -> Result<DirectedMultigraph, voltage_tower_core::Error> {
        let edges = self.edges.iter().map(|&[s, t]| (s, t)).collect();
        let mut g = DirectedMultigraph::new(self.vertex_count, edges)?
            .with_name(self.name.clone())
            .with_directed(self.directed);
        if let Some(labels) = &self.labels {
            g = g.with_labels(labels.clone())?;
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelDocument {
    pub n: u32,
    pub component_count: u64,
    pub kappa: String,
    pub ord_p: u32,
    pub predicted_ord_p: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerReportDocument {
    pub schema: String,
    pub p: u64,
    pub n0: u32,
    pub mu: u64,
    pub lambda: u64,
    pub fitted_nu: Option<i64>,
    pub exact_from_level: Option<u32>,
    pub levels: Vec<LevelDocument>,
}

impl TowerReportDocument {
    pub fn from_report(r: &TowerReport) -> Self {
        Self {
            schema: TOWER_REPORT_SCHEMA.to_string(),
            p: r.p.get(),
            n0: r.n0,
            mu: r.mu,
            lambda: r.lambda,
            fitted_nu: r.fitted_nu,
            exact_from_level: r.exact_from_level,
            levels: r
                .levels
                .iter()
                .map(|l| LevelDocument {
                    n: l.n,
                    component_count: l.component_count,
                    kappa: l.kappa_per_component.to_string(),
                    ord_p: l.ord_p,
                    predicted_ord_p: l.predicted_ord_p,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsDocument {
    pub schema: String,
    pub p: u64,
    pub n0: u32,
    pub mu: u64,
    pub lambda: u64,
    pub mu_total: u64,
    pub lambda_total: u64,
    /// Coefficients of `(1+T)^r M_X(T)`, constant term first.
    pub charpoly: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower_report: Option<TowerReportDocument>,
}

impl InvariantsDocument {
    pub fn new(inv: &IwasawaInvariants, report: Option<&TowerReport>) -> Self {
        Self {
            schema: INVARIANTS_SCHEMA.to_string(),
            p: inv.p.get(),
            n0: inv.n0,
            mu: inv.mu,
            lambda: inv.lambda,
            mu_total: inv.mu_total,
            lambda_total: inv.lambda_total,
            charpoly: inv.charpoly.coeffs().iter().map(ToString::to_string).collect(),
            tower_report: report.map(TowerReportDocument::from_report),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}
