//! Report rendering: JSON (schema-stable, exact values preserved) and plain
//! text for terminals.
//!
//! JSON encoding rules: exact rationals go out as {"num": "...", "den": "..."}
//! string pairs so nothing is rounded; floating-point approximations go out as
//! {"value": "...", "precision": "f64"} decimal strings.

use serde_json::{json, Map, Value};

use crate::analysis::{
    ApproxClass, Bounds, ConsistencyFlag, FlagStatus, Heights, IsolatedComplexRoot,
    QuadraticSolution, RealRoot, RootReport,
};
use crate::bezout::ExactMatrix;
use crate::poly::Poly;
use crate::scalar::{Coeff, GaussianRational, Quaternion, Rational, SphericalClassRep};

pub fn rational_json(r: &Rational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

pub fn approx_json(x: f64) -> Value {
    json!({
        "value": format!("{x}"),
        "precision": "f64",
    })
}

pub fn gaussian_json(z: &GaussianRational) -> Value {
    json!({
        "re": rational_json(&z.re),
        "im": rational_json(&z.im),
    })
}

pub fn quaternion_json(q: &Quaternion) -> Value {
    json!({
        "x0": rational_json(&q.x0),
        "x1": rational_json(&q.x1),
        "x2": rational_json(&q.x2),
        "x3": rational_json(&q.x3),
    })
}

/// Ascending coefficient array.
pub fn poly_json<T: Coeff>(p: &Poly<T>, coeff: impl Fn(&T) -> Value) -> Value {
    Value::Array(p.coeffs().iter().map(|c| coeff(c)).collect())
}

fn real_root_json(r: &RealRoot) -> Value {
    match r {
        RealRoot::Rational(x) => json!({
            "kind": "rational",
            "value": rational_json(x),
        }),
        RealRoot::Interval { lo, hi } => json!({
            "kind": "interval",
            "lo": rational_json(lo),
            "hi": rational_json(hi),
        }),
    }
}

fn class_json(c: &SphericalClassRep) -> Value {
    json!({
        "re": rational_json(&c.re),
        "imag_norm_sq": rational_json(&c.imag_norm_sq),
    })
}

fn approx_class_json(c: &ApproxClass) -> Value {
    json!({
        "re": approx_json(c.re),
        "imag_norm_sq": approx_json(c.imag_norm_sq),
    })
}

fn isolated_json(r: &IsolatedComplexRoot) -> Value {
    json!({
        "re": approx_json(r.re),
        "im": approx_json(r.im),
        "residual_bound": approx_json(r.residual_bound),
        "exact": match &r.exact {
            Some(z) => gaussian_json(z),
            None => Value::Null,
        },
    })
}

fn flag_status_str(s: FlagStatus) -> &'static str {
    match s {
        FlagStatus::Pass => "pass",
        FlagStatus::Warn => "warn",
        FlagStatus::NotApplicable => "n/a",
        FlagStatus::Fail => "fail",
    }
}

fn flag_json(f: &ConsistencyFlag) -> Value {
    json!({
        "name": f.name,
        "status": flag_status_str(f.status),
        "detail": f.detail,
    })
}

fn heights_json(h: &Heights) -> Value {
    json!({
        "hq_sq": rational_json(&h.hq_sq),
        "h1_sq": rational_json(&h.h1_sq),
        "h2_sq": rational_json(&h.h2_sq),
        "excluded_components": h.excluded,
    })
}

pub fn bounds_json(b: &Bounds) -> Value {
    json!({
        "heights": heights_json(&b.heights),
        "general": approx_json(b.general),
        "isolated_complex": approx_json(b.isolated_complex),
        "spherical": approx_json(b.spherical),
    })
}

pub fn report_json(r: &RootReport) -> Value {
    let mut m = Map::new();
    m.insert("monic_input".into(), poly_json(&r.monic_input, quaternion_json));
    m.insert("f".into(), poly_json(&r.f, gaussian_json));
    m.insert("g".into(), poly_json(&r.g, gaussian_json));
    m.insert("f1".into(), poly_json(&r.f1, rational_json));
    m.insert("f2".into(), poly_json(&r.f2, rational_json));
    m.insert("g1".into(), poly_json(&r.g1, rational_json));
    m.insert("g2".into(), poly_json(&r.g2, rational_json));
    m.insert("e".into(), poly_json(&r.e, gaussian_json));
    m.insert("d".into(), poly_json(&r.d, rational_json));
    m.insert("rank_bez_fg".into(), json!(r.rank_bez_fg));
    m.insert("rank_barnett".into(), json!(r.rank_barnett));
    m.insert("has_complex_root".into(), json!(r.has_complex_root));
    m.insert("max_complex_roots".into(), json!(r.max_complex_roots));
    m.insert("has_real_root".into(), json!(r.has_real_root));
    m.insert("has_spherical_root".into(), json!(r.has_spherical_root));
    m.insert(
        "has_isolated_complex_root".into(),
        json!(r.has_isolated_complex_root),
    );
    m.insert(
        "real_roots".into(),
        Value::Array(r.real_roots.iter().map(real_root_json).collect()),
    );
    m.insert(
        "spherical_classes".into(),
        Value::Array(r.spherical_classes.iter().map(class_json).collect()),
    );
    m.insert(
        "approx_spherical_classes".into(),
        Value::Array(
            r.approx_spherical_classes
                .iter()
                .map(approx_class_json)
                .collect(),
        ),
    );
    m.insert(
        "isolated_complex_roots".into(),
        Value::Array(r.isolated_complex_roots.iter().map(isolated_json).collect()),
    );
    m.insert("bounds".into(), bounds_json(&r.bounds));
    m.insert(
        "input_in_complex_subring".into(),
        json!(r.input_in_complex_subring),
    );
    m.insert(
        "consistency_flags".into(),
        Value::Array(r.consistency_flags.iter().map(flag_json).collect()),
    );
    Value::Object(m)
}

pub fn quadratic_json(s: &QuadraticSolution) -> Value {
    json!({
        "q": gaussian_json(&s.q),
        "q_conjugate_class_rep": gaussian_json(&s.q.conj()),
        "sigma": quaternion_json(&s.sigma),
        "p": quaternion_json(&s.p),
        "coincident": s.coincident,
    })
}

pub fn integer_roots_json(roots: &[Quaternion]) -> Value {
    Value::Array(roots.iter().map(quaternion_json).collect())
}

pub fn matrix_json<T: crate::scalar::CommutativeCoeff>(m: &ExactMatrix<T>, coeff: impl Fn(&T) -> Value) -> Value {
    let rows: Vec<Value> = (0..m.rows)
        .map(|i| Value::Array((0..m.cols).map(|j| coeff(m.get(i, j))).collect()))
        .collect();
    json!({
        "rows": m.rows,
        "cols": m.cols,
        "entries": Value::Array(rows),
    })
}

// ---------------------------------------------------------------------------
// Plain-text rendering

fn real_root_text(r: &RealRoot) -> String {
    match r {
        RealRoot::Rational(x) => format!("{}", x),
        RealRoot::Interval { lo, hi } => format!("({}, {}]", lo, hi),
    }
}

pub fn report_text(r: &RootReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("monic input:      {}", r.monic_input));
    line(format!("f(t):             {}", r.f));
    line(format!("g(t):             {}", r.g));
    line(format!("E(t) = gcd(f,g):  {}", r.e));
    line(format!("D(t):             {}", r.d));
    line(format!(
        "rank Bez(f,g):    {}   barnett stack rank: {}",
        r.rank_bez_fg, r.rank_barnett
    ));
    line(format!(
        "complex roots:    {} (at most {} classes)",
        if r.has_complex_root { "yes" } else { "no" },
        r.max_complex_roots
    ));
    line(format!(
        "real roots:       {}",
        if r.real_roots.is_empty() {
            "none".to_string()
        } else {
            r.real_roots
                .iter()
                .map(real_root_text)
                .collect::<Vec<_>>()
                .join(", ")
        }
    ));
    if r.spherical_classes.is_empty() && r.approx_spherical_classes.is_empty() {
        line(format!(
            "spherical roots:  {}",
            if r.has_spherical_root { "yes" } else { "none" }
        ));
    } else {
        let mut parts: Vec<String> = r
            .spherical_classes
            .iter()
            .map(|c| format!("{}", c))
            .collect();
        for c in &r.approx_spherical_classes {
            parts.push(format!("(re ~ {}, |Im|^2 ~ {})", c.re, c.imag_norm_sq));
        }
        line(format!("spherical roots:  {}", parts.join(", ")));
    }
    if r.isolated_complex_roots.is_empty() {
        line(format!(
            "isolated complex: {}",
            if r.has_isolated_complex_root {
                "yes"
            } else {
                "none"
            }
        ));
    } else {
        let parts: Vec<String> = r
            .isolated_complex_roots
            .iter()
            .map(|z| match &z.exact {
                Some(e) => format!("{} (exact)", e),
                None => format!("{} + {}i (residual <= {:.3e})", z.re, z.im, z.residual_bound),
            })
            .collect();
        line(format!("isolated complex: {}", parts.join(", ")));
    }
    line(format!(
        "root bounds:      |q| < {} (general), < {} (isolated complex), < {} (spherical)",
        r.bounds.general, r.bounds.isolated_complex, r.bounds.spherical
    ));
    for f in &r.consistency_flags {
        if f.status != FlagStatus::Pass {
            line(format!(
                "check {}: {} ({})",
                f.name,
                flag_status_str(f.status),
                f.detail
            ));
        }
    }
    out
}

pub fn quadratic_text(s: &QuadraticSolution) -> String {
    if s.coincident {
        format!(
            "complex root: q = {}\nall roots coincide with q (sigma = q)\n",
            s.q
        )
    } else {
        format!(
            "complex root: q = {}\nsecond root:  sigma = {} (congruent to {})\n",
            s.q, s.sigma, s.p
        )
    }
}

pub fn bounds_text(b: &Bounds) -> String {
    format!(
        "H(Q)^2 = {}, H1^2 = {}, H2^2 = {}\n|q| < {} for any root\n|q| < {} for isolated complex roots\n|q| < {} for spherical roots\n",
        b.heights.hq_sq,
        b.heights.h1_sq,
        b.heights.h2_sq,
        b.general,
        b.isolated_complex,
        b.spherical
    )
}

pub fn integer_roots_text(roots: &[Quaternion]) -> String {
    if roots.is_empty() {
        "no integer roots\n".to_string()
    } else {
        let mut out = String::new();
        for q in roots {
            out.push_str(&format!("{}\n", q));
        }
        out
    }
}

pub fn matrix_text<T: crate::scalar::CommutativeCoeff>(m: &ExactMatrix<T>) -> String {
    let mut out = String::new();
    for i in 0..m.rows {
        let row: Vec<String> = (0..m.cols).map(|j| format!("{}", m.get(i, j))).collect();
        out.push_str(&format!("[ {} ]\n", row.join(", ")));
    }
    out
}
