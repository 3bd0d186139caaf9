use std::fmt::Write;

use ramified::{
    AmplifyReport, BranchingDatum, Constellation, DatumClass, ExactPolynomial, GaloisDatum, GenusBound, Passport,
    RadicalExpr, RittVerdict, Tracked,
};

fn complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re}")
    } else if im < 0.0 {
        format!("{re} - {}i", -im)
    } else {
        format!("{re} + {im}i")
    }
}

fn orders_list(orders: &[u64]) -> String {
    let parts: Vec<String> = orders.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn datum(d: &BranchingDatum, passport: &Passport) -> String {
    let mut out = format!("datum {}\n", orders_list(&d.orders()));
    for e in passport {
        let _ = writeln!(out, "  {}: cycle type {:?}", e.point, e.cycle_type);
    }
    out.trim_end().to_string()
}

pub fn class(c: &DatumClass) -> String {
    let bound = match c.genus_bound {
        GenusBound::Zero => "0".to_string(),
        GenusBound::One => "1".to_string(),
        GenusBound::Unbounded => "unbounded".to_string(),
    };
    let mut out = format!("family {}", c.tag);
    if let Some(n) = c.param {
        let _ = write!(out, " with n = {n}");
    }
    let _ = write!(out, "\ngenus bound {bound}\nsolvable monodromy guaranteed: {}", c.solvable_guarantee);
    if c.degree_five_equation {
        out.push_str("\ninverses need a degree-5 equation");
    }
    out
}

pub fn constellation(c: &Constellation) -> String {
    let mut out = format!("degree {}, {} branch points", c.degree(), c.slots().len());
    for s in c.slots() {
        let cycles: Vec<String> = s
            .perm
            .cycles()
            .iter()
            .filter(|cy| cy.len() > 1)
            .map(|cy| format!("({})", cy.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
            .collect();
        let shown = if cycles.is_empty() { "()".to_string() } else { cycles.join("") };
        if shown.len() > 200 {
            let _ = write!(out, "\n  {}: order {}", s.point, s.perm.order());
        } else {
            let _ = write!(out, "\n  {}: {shown}", s.point);
        }
    }
    out
}

pub fn components(list: &[&Constellation]) -> String {
    let degrees: Vec<String> = list.iter().map(|c| c.degree().to_string()).collect();
    format!("{} components of degrees {}", list.len(), degrees.join(", "))
}

pub fn galois_data(data: &[GaloisDatum]) -> String {
    data.iter().map(|d| format!("{} n={}", orders_list(&d.orders), d.n)).collect::<Vec<_>>().join("\n")
}

pub fn amplify(r: &AmplifyReport) -> String {
    format!(
        "d = {}\ngenus {} -> {}\nmonodromy order {} -> {}",
        r.d, r.genus_before, r.genus_after, r.monodromy_order_before, r.monodromy_order_after
    )
}

pub fn invert(expr: &RadicalExpr, preimages: &[[f64; 2]]) -> String {
    let mut out = format!("radical tree with {} nodes; preimages:", expr.node_count());
    for v in preimages {
        let _ = write!(out, "\n  {}", complex(v[0], v[1]));
    }
    out
}

pub fn roots(roots: &[Tracked]) -> String {
    roots.iter().map(|r| complex(r.value.re, r.value.im)).collect::<Vec<_>>().join("\n")
}

pub fn decompose(factors: &[ExactPolynomial], datum: &BranchingDatum) -> String {
    let mut out = format!("critical datum {}", orders_list(&datum.orders()));
    for (i, f) in factors.iter().enumerate() {
        let _ = write!(out, "\n  g{} = {f}", i + 1);
    }
    out
}

pub fn ritt(v: &RittVerdict, preimages: Option<&[Tracked]>) -> String {
    let mut out = if v.invertible { "invertible in radicals" } else { "not invertible in radicals" }.to_string();
    for f in &v.factors {
        let _ = write!(out, "\n  {:?} degree {}: {}", f.class.tag, f.class.degree, f.polynomial);
    }
    if let Some(pre) = preimages {
        out.push_str("\npreimages:\n");
        out.push_str(&roots(pre));
    }
    out
}
