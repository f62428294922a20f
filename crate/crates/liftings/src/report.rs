//! Report structures serialized by the CLI (JSON and text).
//!
//! The JSON schema is versioned through the `schema` field; polynomials
//! are serialized in the crate's text syntax. Field order is fixed by the
//! struct definitions and all collections are in deterministic order, so
//! reports are byte-identical across runs with the same inputs and seed.

use serde::Serialize;

pub const SCHEMA: &str = "liftings-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct ReportMeta {
    pub schema: &'static str,
    pub command: String,
    pub field: String,
    pub ring: Vec<String>,
    pub parameters: Vec<String>,
    pub order: String,
    pub seed: u64,
}

/// One row of the canonical parameter enumeration table: which template
/// member the parameter decorates, its tail term and its torus weight.
#[derive(Clone, Debug, Serialize)]
pub struct ParamRow {
    pub name: String,
    pub generator: usize,
    pub tail_term: String,
    pub weight: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct GbReport {
    pub meta: ReportMeta,
    pub reduced_gb: Vec<String>,
    pub initial_ideal: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftSchemeReport {
    pub meta: ReportMeta,
    pub parameter_count: usize,
    pub parameter_table: Vec<ParamRow>,
    pub h0_generators: Vec<String>,
    pub reduced_gb: Vec<String>,
    pub eliminated: Vec<(String, String)>,
    pub eliminated_count: usize,
    pub free_parameters: Vec<String>,
    pub residual_gb: Vec<String>,
    pub is_affine_space: bool,
    pub specialized_family: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomReport {
    pub meta: ReportMeta,
    pub order1: String,
    pub order2: String,
    pub parameter_count_1: usize,
    pub parameter_count_2: usize,
    pub parameter_table_1: Vec<ParamRow>,
    pub parameter_table_2: Vec<ParamRow>,
    pub free_parameters_1: Vec<String>,
    pub free_parameters_2: Vec<String>,
    pub phi: Vec<(String, String)>,
    pub psi: Vec<(String, String)>,
    pub phi_maps_ideal: bool,
    pub psi_maps_ideal: bool,
    pub chi_identity: bool,
    pub chi_identity_rev: bool,
    pub weights_preserved: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AcmSpecializationReport {
    pub t: String,
    pub i_t: Vec<String>,
    pub is_lifting: bool,
    pub lifted_back: Vec<String>,
    pub decomposition_verified: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AcmReport {
    pub meta: ReportMeta,
    pub coordinate_change: Option<Vec<Vec<String>>>,
    pub g: Vec<String>,
    pub j: Vec<String>,
    pub m_j: Vec<Vec<String>>,
    pub m_h: Vec<Vec<String>>,
    pub n: Vec<String>,
    pub m_n: Vec<Vec<String>>,
    pub omega: Vec<u32>,
    pub m_t: Vec<Vec<String>>,
    pub i_t: Vec<String>,
    pub specializations: Vec<AcmSpecializationReport>,
    pub final_t: String,
    pub final_lifting: Vec<String>,
    pub unit_column_retry: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyLiftingReport {
    pub meta: ReportMeta,
    pub is_lifting: bool,
    pub certificate: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorsReport {
    pub meta: ReportMeta,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscriminantReport {
    pub meta: ReportMeta,
    pub polynomial: String,
    pub variable: String,
    pub discriminant: String,
}

/// Union of everything the runner can emit.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Gb(GbReport),
    LiftScheme(LiftSchemeReport),
    Isom(IsomReport),
    Acm(AcmReport),
    VerifyLifting(VerifyLiftingReport),
    Generators(GeneratorsReport),
    Discriminant(DiscriminantReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// A compact human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push_list = |out: &mut String, title: &str, items: &[String]| {
            out.push_str(title);
            out.push('\n');
            for it in items {
                out.push_str("  ");
                out.push_str(it);
                out.push('\n');
            }
        };
        let push_matrix = |out: &mut String, title: &str, m: &[Vec<String>]| {
            out.push_str(title);
            out.push('\n');
            for row in m {
                out.push_str("  [ ");
                out.push_str(&row.join(" , "));
                out.push_str(" ]\n");
            }
        };
        match self {
            Report::Gb(r) => {
                out.push_str(&format!("command: {}\n", r.meta.command));
                push_list(&mut out, "reduced Groebner basis:", &r.reduced_gb);
                push_list(&mut out, "initial ideal:", &r.initial_ideal);
            }
            Report::LiftScheme(r) => {
                out.push_str(&format!("command: {}\n", r.meta.command));
                out.push_str(&format!("parameters: {}\n", r.parameter_count));
                push_list(&mut out, "h0 generators:", &r.h0_generators);
                push_list(&mut out, "reduced basis of h0:", &r.reduced_gb);
                out.push_str(&format!(
                    "eliminated: {} -> free: {} [{}]\n",
                    r.eliminated_count,
                    r.free_parameters.len(),
                    r.free_parameters.join(", ")
                ));
                out.push_str(&format!("affine space: {}\n", r.is_affine_space));
                push_list(&mut out, "specialized family:", &r.specialized_family);
            }
            Report::Isom(r) => {
                out.push_str(&format!(
                    "command: {} ({} vs {})\n",
                    r.meta.command, r.order1, r.order2
                ));
                out.push_str(&format!(
                    "parameters: {} / {}\n",
                    r.parameter_count_1, r.parameter_count_2
                ));
                out.push_str("phi (second -> first):\n");
                for (v, img) in &r.phi {
                    out.push_str(&format!("  phi({v}) = {img}\n"));
                }
                out.push_str("psi (first -> second):\n");
                for (v, img) in &r.psi {
                    out.push_str(&format!("  psi({v}) = {img}\n"));
                }
                out.push_str(&format!(
                    "checks: phi_maps_ideal={} psi_maps_ideal={} chi_identity={} chi_identity_rev={} weights={}\n",
                    r.phi_maps_ideal,
                    r.psi_maps_ideal,
                    r.chi_identity,
                    r.chi_identity_rev,
                    r.weights_preserved
                ));
            }
            Report::Acm(r) => {
                out.push_str(&format!("command: {}\n", r.meta.command));
                push_list(&mut out, "reduced basis G:", &r.g);
                push_list(&mut out, "initial staircase j:", &r.j);
                push_matrix(&mut out, "M_j:", &r.m_j);
                push_matrix(&mut out, "M_H:", &r.m_h);
                push_list(&mut out, "distraction N:", &r.n);
                push_matrix(&mut out, "M_N:", &r.m_n);
                out.push_str(&format!("omega: {:?}\n", r.omega));
                push_matrix(&mut out, "M(t):", &r.m_t);
                push_list(&mut out, "I(t):", &r.i_t);
                for s in &r.specializations {
                    out.push_str(&format!(
                        "t = {}: is_lifting={}{}\n",
                        s.t,
                        s.is_lifting,
                        match s.decomposition_verified {
                            Some(v) => format!(" decomposition_verified={v}"),
                            None => String::new(),
                        }
                    ));
                }
                out.push_str(&format!("final t: {}\n", r.final_t));
                push_list(&mut out, "radical lifting of H:", &r.final_lifting);
            }
            Report::VerifyLifting(r) => {
                out.push_str(&format!("command: {}\n", r.meta.command));
                out.push_str(&format!("is_lifting: {}\n", r.is_lifting));
                push_list(&mut out, "certificate (g_a):", &r.certificate);
            }
            Report::Generators(r) => {
                out.push_str(&format!("command: {}\n", r.meta.command));
                push_list(&mut out, "generators:", &r.generators);
            }
            Report::Discriminant(r) => {
                out.push_str(&format!("command: {}\n", r.meta.command));
                out.push_str(&format!(
                    "discriminant of {} w.r.t. {}:\n  {}\n",
                    r.polynomial, r.variable, r.discriminant
                ));
            }
        }
        out
    }
}
