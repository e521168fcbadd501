//! JSON and markdown reports for a single group.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::brauer::{Assembly, BrauerReport, Order};
use crate::error::Result;
use crate::finab::{FinAbGroup, GroupSummary};

use super::parse::{parse_group_with, render, ParseOptions};
use super::table::table_section7;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_GRADED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunMode {
    Moduli,
    Stack,
    Both,
    Table7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

/// One invocation of the front end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliRequest {
    /// Preset (`PSp(6) d=1`) or raw spec (`type=C3 pi1=full ...`).
    pub spec_source: String,
    pub genus: Option<u32>,
    pub mode: RunMode,
    pub format: Format,
    pub allow_low_genus: bool,
}

impl CliRequest {
    pub fn new(spec_source: impl Into<String>) -> Self {
        CliRequest {
            spec_source: spec_source.into(),
            genus: None,
            mode: RunMode::Both,
            format: Format::Json,
            allow_low_genus: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub document: String,
    pub exit_code: i32,
    pub warnings: Vec<String>,
}

fn summary(g: &FinAbGroup) -> Value {
    serde_json::to_value(GroupSummary::from(g)).expect("summary serializes")
}

fn assembly_json(a: &Assembly) -> Value {
    let (order, bounds) = match &a.order {
        Order::Exact(n) => (json!(n.to_string()), Value::Null),
        Order::Bounds { lower, upper } => {
            (Value::Null, json!({"lower": lower.to_string(), "upper": upper.to_string()}))
        }
    };
    json!({
        "pieces": a.pieces.iter().map(|p| json!({"name": p.name, "group": summary(&p.group)})).collect::<Vec<_>>(),
        "split": a.split,
        "order": order,
        "order_bounds": bounds,
        "group": a.group.as_ref().map(summary),
    })
}

/// The report as a JSON value with stable keys.
pub fn report_json(r: &BrauerReport) -> Value {
    let spec = &r.spec;
    json!({
        "input": {
            "spec": render(spec),
            "factors": spec.factors().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "pi1_gens": spec.pi1_gens(),
            "delta": spec.delta(),
            "genus": spec.genus(),
            "mode": spec.mode(),
            "allow_low_genus": spec.allow_low_genus(),
            "kind": r.kind.to_string(),
        },
        "center": summary(&r.center),
        "pi1": summary(&r.pi1),
        "psi": {"per_factor_orders": r.psi.per_factor_orders(), "group": summary(r.psi.group())},
        "psi_G": summary(&r.psi_g),
        "ev_image": summary(&r.ev_image),
        "coker_ev": summary(&r.coker_ev),
        "gamma": summary(&r.gamma),
        "h2_gamma": summary(&r.h2_gamma),
        "pi1_dual_quotient": r.pi1_dual_quotient.as_ref().map(summary),
        "stack_brauer": assembly_json(&r.stack_brauer),
        "moduli_brauer": assembly_json(&r.moduli_brauer),
        "descent_power": r.descent_power,
        "cross_check": {
            "status": r.cross_check.status,
            "m": r.cross_check.m,
            "lhs": r.cross_check.lhs.as_ref().map(|x| x.to_string()),
            "rhs": r.cross_check.rhs.as_ref().map(|x| x.to_string()),
        },
        "citations": r.notes,
    })
}

fn assembly_cell(a: &Assembly) -> String {
    match &a.group {
        Some(g) => g.label(),
        None => {
            let pieces = a.pieces.iter().map(|p| format!("{}: {}", p.name, p.group.label())).collect::<Vec<_>>();
            format!("order {} (graded: {})", a.order, pieces.join("; "))
        }
    }
}

/// The report as a two-column markdown table.
pub fn report_markdown(r: &BrauerReport, mode: RunMode) -> String {
    let spec = &r.spec;
    let mut rows: Vec<(&str, String)> = vec![
        ("spec", format!("`{}`", render(spec))),
        ("kind", r.kind.to_string()),
        ("genus", spec.genus().to_string()),
        ("Z", r.center.label()),
        ("π₁(G)", r.pi1.label()),
        ("Ψ", r.psi.group().label()),
        ("Ψ(G)", r.psi_g.label()),
        ("im ev", r.ev_image.label()),
        ("coker ev", r.coker_ev.label()),
        ("Γ", r.gamma.label()),
        ("H²(Γ, C*)", r.h2_gamma.label()),
    ];
    if mode != RunMode::Moduli {
        rows.push(("Br(stack)", assembly_cell(&r.stack_brauer)));
    }
    if mode != RunMode::Stack {
        rows.push(("Br(moduli rs)", assembly_cell(&r.moduli_brauer)));
    }
    if let Some(p) = r.descent_power {
        rows.push(("descent power", p.to_string()));
    }
    let cc = &r.cross_check;
    let m = cc.m.map(|m| format!(" (m = {m})")).unwrap_or_default();
    rows.push(("cross-check", format!("{}{m}", serde_json::to_value(cc.status).unwrap().as_str().unwrap())));

    let mut out = String::from("| quantity | value |\n|---|---|\n");
    for (k, v) in rows {
        out.push_str(&format!("| {k} | {v} |\n"));
    }
    if !r.notes.is_empty() {
        out.push('\n');
        for n in &r.notes {
            out.push_str(&format!("- {n}\n"));
        }
    }
    out
}

fn exit_code(r: &BrauerReport, mode: RunMode) -> i32 {
    let graded = match mode {
        RunMode::Stack => !r.stack_brauer.is_resolved(),
        RunMode::Moduli => !r.moduli_brauer.is_resolved(),
        _ => !r.is_resolved(),
    };
    if graded {
        EXIT_GRADED
    } else {
        EXIT_OK
    }
}

/// Runs one request. Errors are returned, not rendered; the exit code covers success and graded-only results.
pub fn run(req: &CliRequest) -> Result<RunOutput> {
    if req.mode == RunMode::Table7 {
        let table = table_section7()?;
        let document = match req.format {
            Format::Json => serde_json::to_string_pretty(&table).expect("table serializes"),
            Format::Md => table.to_markdown(),
        };
        let exit_code = if table.all_pass() { EXIT_OK } else { EXIT_ERROR };
        return Ok(RunOutput { document, exit_code, warnings: vec![] });
    }
    let opts = ParseOptions { genus: req.genus, allow_low_genus: req.allow_low_genus, ..Default::default() };
    let spec = parse_group_with(&req.spec_source, opts)?;
    let mut warnings = Vec::new();
    if spec.genus() < 3 {
        warnings.push(format!("genus {} is below 3; results assume the genus >= 3 statements", spec.genus()));
    }
    let report = BrauerReport::compute(&spec)?;
    let document = match req.format {
        Format::Json => serde_json::to_string_pretty(&report_json(&report)).expect("report serializes"),
        Format::Md => report_markdown(&report, req.mode),
    };
    Ok(RunOutput { document, exit_code: exit_code(&report, req.mode), warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json_of(s: &str) -> (Value, i32) {
        let out = run(&CliRequest::new(s)).unwrap();
        (serde_json::from_str(&out.document).unwrap(), out.exit_code)
    }

    #[test]
    fn sp_twisted_example() {
        let (v, code) = json_of("Sp(6) twisted d=1 genus=3");
        assert_eq!(code, EXIT_OK);
        assert_eq!(v["moduli_brauer"]["group"]["invariant_factors"], json!([]));
        assert_eq!(v["descent_power"], json!(2));
    }

    #[test]
    fn pgl_is_graded() {
        let (v, code) = json_of("PGL(2) d=1 genus=3");
        assert_eq!(code, EXIT_GRADED);
        assert_eq!(v["moduli_brauer"]["split"], json!("order-only"));
        assert!(v["moduli_brauer"]["order_bounds"]["lower"].is_string());
        assert_eq!(v["coker_ev"]["order"], json!("1"));
    }

    #[test]
    fn e8_is_trivial() {
        let (v, code) = json_of("E8 genus=3");
        assert_eq!(code, EXIT_OK);
        assert_eq!(v["stack_brauer"]["order"], json!("1"));
        assert_eq!(v["moduli_brauer"]["order"], json!("1"));
    }

    #[test]
    fn markdown_and_modes() {
        let mut req = CliRequest::new("PSp(6) d=1 genus=3");
        req.format = Format::Md;
        req.mode = RunMode::Stack;
        let out = run(&req).unwrap();
        assert!(out.document.contains("| Br(stack) | (Z/2)^15 |"));
        assert!(!out.document.contains("Br(moduli rs)"));
    }

    #[test]
    fn low_genus_warns() {
        let mut req = CliRequest::new("SL(3) d=1");
        req.genus = Some(2);
        assert!(run(&req).is_err());
        req.allow_low_genus = true;
        let out = run(&req).unwrap();
        assert_eq!(out.warnings.len(), 1);
    }
}
