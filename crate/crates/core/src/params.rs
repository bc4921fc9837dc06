//! Audits the relations between a graph and its auxiliary graph: degree
//! bounds, diameter bound and clique number.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, circumference, maximal_cliques, minimal_edge_cuts, Graph};
use crate::stag::{build_stag, StagGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub name: &'static str,
    pub statement: String,
    pub lhs: i64,
    pub rhs: i64,
    /// `None` when the relation does not apply (acyclic graphs for the
    /// clique number).
    pub holds: Option<bool>,
    /// Distance from the bound; 0 is tight, negative is a violation.
    pub slack: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub n: usize,
    pub m: usize,
    pub trees: usize,
    pub delta_aux: usize,
    pub max_degree_aux: usize,
    pub diam_aux: usize,
    /// Largest half symmetric difference over all tree pairs.
    pub diam_symdiff: usize,
    pub omega_aux: usize,
    pub circumference_g: Option<usize>,
    pub max_minimal_cut_g: usize,
    pub relations: Vec<Relation>,
}

impl ParamReport {
    /// True unless some applicable relation fails.
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds != Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "n={} m={} trees={} delta={} Delta={} diam={} omega={}\n",
            self.n, self.m, self.trees, self.delta_aux, self.max_degree_aux, self.diam_aux, self.omega_aux
        );
        out += &format!("{:<14} {:<34} {:>6} {:>6} {:>6}  verdict\n", "relation", "statement", "lhs", "rhs", "slack");
        for r in &self.relations {
            let verdict = match r.holds {
                Some(true) => "ok",
                Some(false) => "VIOLATED",
                None => "skipped",
            };
            out += &format!(
                "{:<14} {:<34} {:>6} {:>6} {:>6}  {}\n",
                r.name, r.statement, r.lhs, r.rhs, r.slack, verdict
            );
        }
        out
    }
}

fn relation(name: &'static str, statement: String, lhs: usize, rhs: usize, slack: i64, holds: bool) -> Relation {
    Relation {
        name,
        statement,
        lhs: lhs as i64,
        rhs: rhs as i64,
        holds: Some(holds),
        slack,
    }
}

pub fn param_report(g: &Graph, max_trees: usize, max_n: usize) -> Result<ParamReport> {
    let s = build_stag(g, max_trees)?;
    report_for(g, &s, max_n)
}

/// Same as [`param_report`] for an already built `Aux(g)`.
pub fn report_for(g: &Graph, s: &StagGraph, max_n: usize) -> Result<ParamReport> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let nullity = m + 1 - n;
    let h = s.graph();
    let degrees = h.degree_sequence();
    let max_degree_aux = degrees.iter().copied().max().unwrap_or(0);
    let delta_aux = degrees.iter().copied().min().unwrap_or(0);
    let diam_aux = h
        .vertices()
        .map(|v| bfs_distances(h, v).into_iter().max().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let trees = s.trees().ok_or(Error::Unannotated)?;
    let mut diam_symdiff = 0;
    for (i, a) in trees.iter().enumerate() {
        for b in &trees[i + 1..] {
            diam_symdiff = diam_symdiff.max(a.symmetric_difference_len(b) / 2);
        }
    }
    let omega_aux = maximal_cliques(h).iter().map(Vec::len).max().unwrap_or(1);
    let circumference_g = match circumference(g, max_n) {
        Ok(c) => Some(c),
        Err(Error::Acyclic) => None,
        Err(e) => return Err(e),
    };
    let max_minimal_cut_g = minimal_edge_cuts(g, max_n)?
        .iter()
        .map(|c| c.edge_ids.len())
        .max()
        .unwrap_or(0);

    let cap = (n - 1) * nullity;
    let mut relations = vec![
        relation(
            "max_degree",
            format!("Delta <= (n-1)(m-n+1) = {cap}"),
            max_degree_aux,
            cap,
            cap as i64 - max_degree_aux as i64,
            max_degree_aux <= cap,
        ),
        relation(
            "min_degree",
            format!("delta >= 2(m-n+1) = {}", 2 * nullity),
            delta_aux,
            2 * nullity,
            delta_aux as i64 - 2 * nullity as i64,
            delta_aux >= 2 * nullity,
        ),
        relation(
            "diameter",
            format!("diam <= n-1 = {}", n - 1),
            diam_aux,
            n - 1,
            (n - 1) as i64 - diam_aux as i64,
            diam_aux < n,
        ),
        relation(
            "diameter_exch",
            format!("diam = max |T1 ^ T2| / 2 = {diam_symdiff}"),
            diam_aux,
            diam_symdiff,
            0,
            diam_aux == diam_symdiff,
        ),
    ];
    let omega = match circumference_g {
        Some(c) => {
            let target = c.max(max_minimal_cut_g);
            relation(
                "clique_number",
                format!("omega = max(circ, maxcut) = {target}"),
                omega_aux,
                target,
                target as i64 - omega_aux as i64,
                omega_aux == target,
            )
        }
        None => Relation {
            name: "clique_number",
            statement: "omega = max(circ, maxcut)".into(),
            lhs: omega_aux as i64,
            rhs: 0,
            holds: None,
            slack: 0,
        },
    };
    relations.push(omega);
    Ok(ParamReport {
        n,
        m,
        trees: trees.len(),
        delta_aux,
        max_degree_aux,
        diam_aux,
        diam_symdiff,
        omega_aux,
        circumference_g,
        max_minimal_cut_g,
        relations,
    })
}
