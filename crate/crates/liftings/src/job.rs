//! Input parsing and command dispatch for the CLI.
//!
//! Input files are sequences of statements terminated by `;`:
//!
//! ```text
//! field GF(13);                  // or: field Q;
//! ring Q[x0,x1,x2];              // towers: ring GF(2)[chi][x0,x1,x2];
//! order degrevlex;               // lex | deglex | degrevlex
//! weights 3,2,0;                 // optional (deformation weight / omega)
//! ideal H = x0^2, x0*x1, x1^3;
//! ```
//!
//! With a tower ring the first bracket lists the coefficient parameters
//! and the second the geometric variables. A `field` statement overrides
//! the field named in `ring`. Every command reads the ideal(s) it needs by
//! name first (`H`, `I`, `J`), falling back to declaration order;
//! `acm_lift` treats all ideals besides `H` as decomposition components to
//! verify the final lifting against.

use crate::acm;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{self, Grading};
use crate::isom;
use crate::lifting;
use crate::order::TermOrder;
use crate::poly::Poly;
use crate::report::*;
use crate::resultant;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    LiftScheme,
    Stratum,
    Isom,
    AcmLift,
    VerifyLifting,
    Saturate,
    Truncate,
    Intersect,
    Discriminant,
}

impl Command {
    pub fn parse(name: &str) -> Result<Command> {
        Ok(match name {
            "gb" => Command::Gb,
            "lift_scheme" => Command::LiftScheme,
            "stratum" => Command::Stratum,
            "isom" => Command::Isom,
            "acm_lift" => Command::AcmLift,
            "verify_lifting" => Command::VerifyLifting,
            "saturate" => Command::Saturate,
            "truncate" => Command::Truncate,
            "intersect" => Command::Intersect,
            "discriminant" => Command::Discriminant,
        _ => {
                return Err(Error::Argument(format!("unknown command `{name}`")));
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::LiftScheme => "lift_scheme",
            Command::Stratum => "stratum",
            Command::Isom => "isom",
            Command::AcmLift => "acm_lift",
            Command::VerifyLifting => "verify_lifting",
            Command::Saturate => "saturate",
            Command::Truncate => "truncate",
            Command::Intersect => "intersect",
            Command::Discriminant => "discriminant",
        }
    }
}

pub fn parse_order_name(name: &str) -> Result<TermOrder> {
    Ok(match name {
        "lex" => TermOrder::Lex,
        "deglex" => TermOrder::DegLex,
        "degrevlex" => TermOrder::DegRevLex,
        other => {
            return Err(Error::Argument(format!("unknown order name `{other}`")));
        }
    })
}

pub fn order_name(order: &TermOrder) -> String {
    match order {
        TermOrder::Lex => "lex".into(),
        TermOrder::DegLex => "deglex".into(),
        TermOrder::DegRevLex => "degrevlex".into(),
        TermOrder::WeightedLex { .. } => "weightedlex".into(),
        TermOrder::Degreverse(b) => format!("degreverse({})", order_name(b)),
        TermOrder::Block { outer, inner, .. } => {
            format!("block({}, {})", order_name(outer), order_name(inner))
        }
    }
}

/// Options collected from the command line.
#[derive(Clone, Debug)]
pub struct JobOptions {
    pub order2: Option<String>,
    pub t_values: Vec<i64>,
    pub scalars: Option<String>,
    pub seed: u64,
    pub threads: usize,
    pub truncate_degree: Option<i64>,
    pub variable: Option<String>,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            order2: None,
            t_values: vec![7, 2, 3, 5, 11],
            scalars: None,
            seed: 0,
            threads: 1,
            truncate_degree: None,
            variable: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub ring: Ring,
    pub order: TermOrder,
    pub order_label: String,
    pub weights: Option<Vec<u32>>,
    pub ideals: Vec<(String, Vec<Poly>)>,
    pub options: JobOptions,
}

/// Parses the statement file into a job, with the command and options
/// supplied separately (by the CLI flags).
pub fn parse_job(input: &str, command: Command, options: JobOptions) -> Result<JobSpec> {
    let mut field: Option<FieldSpec> = None;
    let mut ring: Option<Ring> = None;
    let mut order_label = "degrevlex".to_string();
    let mut weights: Option<Vec<u32>> = None;
    let mut pending_ideals: Vec<(String, Vec<String>, usize)> = vec![];

    let mut line = 1usize;
    for raw_stmt in input.split(';') {
        let leading: usize = raw_stmt
            .chars()
            .take_while(|c| c.is_whitespace())
            .filter(|&c| c == '\n')
            .count();
        let stmt_line = line + leading;
        line += raw_stmt.chars().filter(|&c| c == '\n').count();
        let stmt = raw_stmt
            .lines()
            .filter(|l| !l.trim_start().starts_with("//"))
            .collect::<Vec<_>>()
            .join("\n");
        let stmt = stmt.trim().to_string();
        if stmt.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse {
            line: stmt_line,
            col: 1,
            msg,
        };
        let (keyword, rest) = match stmt.split_once(char::is_whitespace) {
            Some((k, r)) => (k.trim(), r.trim()),
            None => (stmt.trim(), ""),
        };
        match keyword {
            "field" => {
                field = Some(parse_field(rest).map_err(|e| perr(e.to_string()))?);
            }
            "ring" => {
                ring = Some(parse_ring(rest, field).map_err(|e| perr(e.to_string()))?);
            }
            "order" => {
                parse_order_name(rest).map_err(|e| perr(e.to_string()))?;
                order_label = rest.to_string();
            }
            "weights" => {
                let ws: Result<Vec<u32>> = rest
                    .split(',')
                    .map(|w| {
                        w.trim()
                            .parse::<u32>()
                            .map_err(|_| perr(format!("bad weight `{w}`")))
                    })
                    .collect();
                weights = Some(ws?);
            }
            "ideal" => {
                let (name, gens) = rest
                    .split_once('=')
                    .ok_or_else(|| perr("expected `ideal NAME = ...`".into()))?;
                let name = name.trim().to_string();
                if name.is_empty() {
                    return Err(perr("empty ideal name".into()));
                }
                let gens: Vec<String> = split_top_level(gens);
                pending_ideals.push((name, gens, stmt_line));
            }
            other => {
                return Err(perr(format!("unknown statement `{other}`")));
            }
        }
    }

    let ring = match (ring, field) {
        (Some(r), _) => r,
        (None, _) => {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: "no ring declared".into(),
            })
        }
    };
    // acm_lift components may mention the fresh lifting variable, so they
    // are read in the extended ring
    let extended = if command == Command::AcmLift {
        Some(crate::acm::acm_main_ring(&ring)?.0)
    } else {
        None
    };
    let mut ideals = vec![];
    for (name, gens, stmt_line) in pending_ideals {
        let target = match &extended {
            Some(ext) if name != "H" => ext,
            _ => &ring,
        };
        let mut polys = vec![];
        for g in gens {
            let p = target.parse_poly(&g).map_err(|e| match e {
                Error::Parse { col, msg, .. } => Error::Parse {
                    line: stmt_line,
                    col,
                    msg,
                },
                other => other,
            })?;
            polys.push(p);
        }
        ideals.push((name, polys));
    }
    let order = parse_order_name(&order_label)?;
    Ok(JobSpec {
        command,
        ring,
        order,
        order_label,
        weights,
        ideals,
        options,
    })
}

fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim();
    if t == "Q" || t == "QQ" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(rest) = t.strip_prefix("GF") {
        let inner = rest
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Argument(format!("malformed field `{t}`")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("bad modulus `{inner}`")))?;
        return FieldSpec::prime_field(p);
    }
    Err(Error::Argument(format!("unknown field `{t}`")))
}

fn parse_ring(text: &str, field: Option<FieldSpec>) -> Result<Ring> {
    // [params][mains] or [mains], optionally preceded by a field name
    let t = text.trim();
    let open = t
        .find('[')
        .ok_or_else(|| Error::Argument("ring needs a variable list".into()))?;
    let field_name = t[..open].trim();
    let field = if field_name.is_empty() {
        field.ok_or_else(|| Error::Argument("no field for the ring".into()))?
    } else {
        parse_field(field_name)?
    };
    let mut groups: Vec<Vec<String>> = vec![];
    let mut rest = &t[open..];
    while let Some(r) = rest.strip_prefix('[') {
        let close = r
            .find(']')
            .ok_or_else(|| Error::Argument("unclosed `[` in ring".into()))?;
        groups.push(
            r[..close]
                .split(',')
                .map(|v| v.trim().to_string())
                .filter(|v| !v.is_empty())
                .collect(),
        );
        rest = r[close + 1..].trim_start();
    }
    if !rest.is_empty() {
        return Err(Error::Argument(format!("trailing ring text `{rest}`")));
    }
    match groups.len() {
        1 => Ring::new(field, groups.pop().unwrap()),
        2 => {
            let mains = groups.pop().unwrap();
            let params = groups.pop().unwrap();
            let num_main = mains.len();
            let mut vars = mains;
            vars.extend(params);
            Ring::with_params(field, vars, num_main)
        }
        n => Err(Error::Argument(format!(
            "expected 1 or 2 variable groups, found {n}"
        ))),
    }
}

fn split_top_level(text: &str) -> Vec<String> {
    text.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn find_ideal<'a>(job: &'a JobSpec, name: &str, fallback: usize) -> Result<&'a [Poly]> {
    if let Some((_, polys)) = job.ideals.iter().find(|(n, _)| n == name) {
        return Ok(polys);
    }
    job.ideals
        .get(fallback)
        .map(|(_, p)| p.as_slice())
        .ok_or_else(|| Error::Argument(format!("no ideal `{name}` declared")))
}

fn meta(job: &JobSpec) -> ReportMeta {
    ReportMeta {
        schema: SCHEMA,
        command: job.command.name().to_string(),
        field: job.ring.field.to_string(),
        ring: job.ring.vars[..job.ring.num_main].to_vec(),
        parameters: job.ring.vars[job.ring.num_main..].to_vec(),
        order: job.order_label.clone(),
        seed: job.options.seed,
    }
}

fn main_grading(ring: &Ring) -> Grading {
    let mut w = vec![0u32; ring.nvars()];
    for x in w[..ring.num_main].iter_mut() {
        *x = 1;
    }
    Grading::Weighted(w)
}

fn fmt_all(ring: &Ring, order: &TermOrder, polys: &[Poly]) -> Vec<String> {
    polys.iter().map(|p| ring.format_poly(p, Some(order))).collect()
}

fn fmt_matrix(ring: &Ring, order: &TermOrder, rows: &[Vec<Poly>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| fmt_all(ring, order, r)).collect()
}

/// Parses the per-variable distraction scalar lists, e.g.
/// `x0:0,-1;x1:0,-1,1`; values are polynomials of the given ring.
pub fn parse_scalars(text: &str, ring: &Ring) -> Result<Vec<Vec<Poly>>> {
    let mut per_var: Vec<Vec<Poly>> = vec![vec![]; ring.num_main];
    for group in text.split(';') {
        let group = group.trim();
        if group.is_empty() {
            continue;
        }
        let (var, vals) = group
            .split_once(':')
            .ok_or_else(|| Error::Argument(format!("malformed scalar group `{group}`")))?;
        let v = ring
            .var_index(var.trim())
            .ok_or_else(|| Error::Argument(format!("unknown variable `{var}` in scalars")))?;
        per_var[v] = vals
            .split(',')
            .map(|s| ring.parse_poly(s.trim()))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(per_var)
}

fn param_table(t: &lifting::LiftingTemplate) -> Vec<ParamRow> {
    t.params
        .iter()
        .map(|p| {
            let mut e = vec![0u16; t.ring.nvars()];
            e[..t.ring.num_main].copy_from_slice(&p.gamma.0[..t.ring.num_main]);
            if t.kind == lifting::TemplateKind::Lifting {
                e[t.ring.num_main - 1] += 1;
            }
            ParamRow {
                name: p.name.clone(),
                generator: p.alpha_index + 1,
                tail_term: t
                    .ring
                    .format_poly(&Poly::monomial(crate::order::Exp(e), t.ring.field.one()), None),
                weight: p.weight,
            }
        })
        .collect()
}

fn lift_scheme_report(job: &JobSpec, stratum: bool) -> Result<Report> {
    let gens = find_ideal(job, "H", 0).or_else(|_| find_ideal(job, "J", 0))?;
    let parallel = job.options.threads > 1;
    let t = if stratum {
        lifting::build_stratum_template(gens, &job.ring, &job.order, "C")?
    } else {
        lifting::build_template(gens, &job.ring, &job.order, "C")?
    };
    let cring = lifting::param_ring(&t);
    let c_order = lifting::param_order(&t);
    let h0 = lifting::compute_h0(&t, false, parallel)?;
    let scheme = lifting::eliminate_linear(&h0, &lifting::param_weights(&t), &cring, &c_order)?;
    let family = lifting::specialized_family(&t, &scheme)?;
    let table = param_table(&t);
    Ok(Report::LiftScheme(LiftSchemeReport {
        meta: meta(job),
        parameter_count: t.params.len(),
        parameter_table: table,
        h0_generators: fmt_all(&cring, &c_order, &scheme.h0_generators),
        reduced_gb: fmt_all(&cring, &c_order, &scheme.reduced_gb),
        eliminated: scheme
            .eliminated
            .iter()
            .map(|(v, rhs)| (cring.vars[*v].clone(), cring.format_poly(rhs, Some(&c_order))))
            .collect(),
        eliminated_count: scheme.eliminated.len(),
        free_parameters: scheme
            .free_params
            .iter()
            .map(|&v| cring.vars[v].clone())
            .collect(),
        residual_gb: fmt_all(&cring, &c_order, &scheme.residual_gb),
        is_affine_space: scheme.is_affine_space,
        specialized_family: fmt_all(&t.ring, &t.order, &family),
    }))
}

/// Executes a parsed job and produces its report.
pub fn run(job: &JobSpec) -> Result<Report> {
    match job.command {
        Command::Gb => {
            let gens = find_ideal(job, "H", 0)?;
            let order = job.ring.tower_order(job.order.clone(), TermOrder::Lex);
            let gb = groebner::buchberger(gens, &order, &job.ring.field, &main_grading(&job.ring))?;
            let heads: Vec<String> = gb
                .iter()
                .map(|g| {
                    let (h, _) = g.head_term(&order).unwrap();
                    job.ring
                        .format_poly(&Poly::monomial(h.clone(), job.ring.field.one()), None)
                })
                .collect();
            Ok(Report::Gb(GbReport {
                meta: meta(job),
                reduced_gb: fmt_all(&job.ring, &order, &gb),
                initial_ideal: heads,
            }))
        }
        Command::LiftScheme => lift_scheme_report(job, false),
        Command::Stratum => lift_scheme_report(job, true),
        Command::Isom => {
            let gens = find_ideal(job, "H", 0)?;
            let order2_label = job
                .options
                .order2
                .clone()
                .ok_or_else(|| Error::Argument("isom needs --order2".into()))?;
            let order2 = parse_order_name(&order2_label)?;
            let parallel = job.options.threads > 1;
            let data = isom::build_isomorphism(gens, &job.ring, &job.order, &order2, parallel)?;
            let v = isom::verify_isomorphism(&data)?;
            if !v.all_pass() {
                return Err(Error::TheoremViolation(format!(
                    "isomorphism verification failed: {v:?}"
                )));
            }
            let c1 = lifting::param_ring(&data.template1);
            let c2 = lifting::param_ring(&data.template2);
            Ok(Report::Isom(IsomReport {
                meta: meta(job),
                order1: job.order_label.clone(),
                order2: order2_label,
                parameter_count_1: data.template1.params.len(),
                parameter_count_2: data.template2.params.len(),
                parameter_table_1: param_table(&data.template1),
                parameter_table_2: param_table(&data.template2),
                free_parameters_1: data
                    .scheme1
                    .free_params
                    .iter()
                    .map(|&v| c1.vars[v].clone())
                    .collect(),
                free_parameters_2: data
                    .scheme2
                    .free_params
                    .iter()
                    .map(|&v| c2.vars[v].clone())
                    .collect(),
                phi: isom::morphism_table(&data.phi, &lifting::param_order(&data.template1)),
                psi: isom::morphism_table(&data.psi, &lifting::param_order(&data.template2)),
                phi_maps_ideal: v.phi_maps_ideal,
                psi_maps_ideal: v.psi_maps_ideal,
                chi_identity: v.chi_identity,
                chi_identity_rev: v.chi_identity_rev,
                weights_preserved: v.weights_preserved,
            }))
        }
        Command::AcmLift => {
            let gens = find_ideal(job, "H", 0)?;
            let (main_ring, _) = acm::acm_main_ring(&job.ring)?;
            let scalars = match &job.options.scalars {
                Some(text) => Some(parse_scalars(text, &main_ring)?),
                None => None,
            };
            let opts = acm::AcmOptions {
                t_values: job.options.t_values.clone(),
                scalars,
                omega: job.weights.clone(),
                auto_generic: true,
                seed: job.options.seed,
            };
            let res = acm::radical_lift(gens, &job.ring, &opts)?;
            // components were parsed in the extended ring already
            let components: Vec<Vec<Poly>> = job
                .ideals
                .iter()
                .filter(|(n, _)| n != "H")
                .map(|(_, polys)| polys.clone())
                .collect();
            let xn_order = TermOrder::degreverse(TermOrder::DegRevLex);
            let order = res.main_ring.tower_order(xn_order, TermOrder::Lex);
            let t_order = res
                .t_ring
                .tower_order(TermOrder::degreverse(TermOrder::DegRevLex), TermOrder::Lex);
            let mut specializations = vec![];
            for s in &res.specializations {
                let verified = if components.is_empty() || !s.is_lifting {
                    None
                } else {
                    Some(acm::verify_radical_against_decomposition(
                        &s.lifted_back,
                        &components,
                        &res.main_ring,
                        &order,
                    )?)
                };
                specializations.push(AcmSpecializationReport {
                    t: s.t.to_string(),
                    i_t: fmt_all(&res.main_ring, &order, &s.i_gens),
                    is_lifting: s.is_lifting,
                    lifted_back: fmt_all(&res.main_ring, &order, &s.lifted_back),
                    decomposition_verified: verified,
                });
            }
            let (final_t, final_lifting) = res.final_lifting.as_ref().unwrap();
            Ok(Report::Acm(AcmReport {
                meta: meta(job),
                coordinate_change: res.coordinate_change.as_ref().map(|m| {
                    m.iter()
                        .map(|row| row.iter().map(|s| s.to_string()).collect())
                        .collect()
                }),
                g: fmt_all(&res.main_ring, &order, &res.g),
                j: fmt_all(&res.main_ring, &order, &res.j_gens),
                m_j: fmt_matrix(&res.main_ring, &order, &res.m_j.rows),
                m_h: fmt_matrix(&res.main_ring, &order, &res.m_h.rows),
                n: fmt_all(&res.main_ring, &order, &res.n_gens),
                m_n: fmt_matrix(&res.main_ring, &order, &res.m_n.rows),
                omega: res.omega.clone(),
                m_t: fmt_matrix(&res.t_ring, &t_order, &res.m_t.rows),
                i_t: fmt_all(&res.t_ring, &t_order, &res.i_t),
                specializations,
                final_t: final_t.to_string(),
                final_lifting: fmt_all(&res.main_ring, &order, final_lifting),
                unit_column_retry: res.unit_column_retry,
            }))
        }
        Command::VerifyLifting => {
            let i_gens = find_ideal(job, "I", 0)?.to_vec();
            let h_gens = find_ideal(job, "H", 1)?.to_vec();
            let (ok, cert) = lifting::is_lifting(&i_gens, &h_gens, &job.ring, &job.order)?;
            let order = job.ring.tower_order(
                TermOrder::degreverse(job.order.clone()),
                TermOrder::Lex,
            );
            Ok(Report::VerifyLifting(VerifyLiftingReport {
                meta: meta(job),
                is_lifting: ok,
                certificate: fmt_all(&job.ring, &order, &cert),
            }))
        }
        Command::Saturate => {
            let gens = find_ideal(job, "I", 0)?;
            let order = job
                .ring
                .tower_order(TermOrder::degreverse(job.order.clone()), TermOrder::Lex);
            let sat = groebner::saturate_xn(gens, &job.ring, &order, &main_grading(&job.ring))?;
            Ok(Report::Generators(GeneratorsReport {
                meta: meta(job),
                generators: fmt_all(&job.ring, &order, &sat),
            }))
        }
        Command::Truncate => {
            let gens = find_ideal(job, "I", 0)?;
            let m = job
                .options
                .truncate_degree
                .ok_or_else(|| Error::Argument("truncate needs --m".into()))?;
            let order = job.ring.tower_order(job.order.clone(), TermOrder::Lex);
            let gb = groebner::buchberger(gens, &order, &job.ring.field, &main_grading(&job.ring))?;
            let up = groebner::truncate(&gb, m, &job.ring)?;
            Ok(Report::Generators(GeneratorsReport {
                meta: meta(job),
                generators: fmt_all(&job.ring, &order, &up),
            }))
        }
        Command::Intersect => {
            let a = find_ideal(job, "I", 0)?.to_vec();
            let b = find_ideal(job, "J", 1)?.to_vec();
            let order = job.ring.tower_order(job.order.clone(), TermOrder::Lex);
            let cap = groebner::intersect(&a, &b, &job.ring, &order)?;
            Ok(Report::Generators(GeneratorsReport {
                meta: meta(job),
                generators: fmt_all(&job.ring, &order, &cap),
            }))
        }
        Command::Discriminant => {
            let gens = find_ideal(job, "F", 0)?;
            let f = gens
                .first()
                .ok_or_else(|| Error::Argument("discriminant needs a polynomial".into()))?;
            let var_name = job
                .options
                .variable
                .clone()
                .ok_or_else(|| Error::Argument("discriminant needs --var".into()))?;
            let var = job
                .ring
                .var_index(&var_name)
                .ok_or_else(|| Error::Argument(format!("unknown variable `{var_name}`")))?;
            let disc = resultant::discriminant(f, var, &job.ring)?;
            let order = job.ring.tower_order(job.order.clone(), TermOrder::Lex);
            Ok(Report::Discriminant(DiscriminantReport {
                meta: meta(job),
                polynomial: job.ring.format_poly(f, Some(&order)),
                variable: var_name,
                discriminant: job.ring.format_poly(&disc, Some(&order)),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_job() {
        let input = "ring Q[x0,x1,x2]; order degrevlex; ideal H = x0^2, x0*x1, x1^3;";
        let job = parse_job(input, Command::Gb, JobOptions::default()).unwrap();
        assert_eq!(job.ring.nvars(), 3);
        assert_eq!(job.ideals[0].1.len(), 3);
        let report = run(&job).unwrap();
        let json = report.to_json();
        assert!(json.contains("reduced_gb"));
    }

    #[test]
    fn parse_field_statement() {
        let input = "field GF(13); ring [x0,x1,x2]; order degrevlex; ideal H = x0^2 - x1^2;";
        let job = parse_job(input, Command::Gb, JobOptions::default()).unwrap();
        assert_eq!(job.ring.field, FieldSpec::prime_field(13).unwrap());
    }

    #[test]
    fn parse_tower_ring() {
        let input = "ring GF(2)[chi][x0,x1,x2,x3]; order degrevlex; ideal H = x0^2 + x1^2;";
        let job = parse_job(input, Command::Gb, JobOptions::default()).unwrap();
        assert_eq!(job.ring.num_main, 4);
        assert_eq!(job.ring.vars[4], "chi");
    }

    #[test]
    fn parse_errors_carry_location() {
        let input = "ring Q[x0];\norder degrevlex;\nideal H = y0^2;";
        let err = parse_job(input, Command::Gb, JobOptions::default()).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other}"),
        }
        let input = "ring Q[x0]; order sideways;";
        assert!(parse_job(input, Command::Gb, JobOptions::default()).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let input = "ring Q[x0,x1,x2]; order degrevlex; ideal J = x0^2, x0*x1, x1^2;";
        let job = parse_job(input, Command::LiftScheme, JobOptions::default()).unwrap();
        let a = run(&job).unwrap().to_json();
        let b = run(&job).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"parameter_count\": 12"));
        assert!(a.contains("\"is_affine_space\": true"));
    }
}
