use super::{all_entries, Tier};
use std::fmt::Write;

/// Markdown listing of every registry entry: equation, density, domain,
/// existence conditions, root bound, tier and zero-free claim.
pub fn reference_document() -> String {
    let mut out = String::from("# Catalog reference\n\n");
    out.push_str(
        "Each equation has the form `sign·(S[φ](z) - bz - c) = 0`, with φ the listed density. \
         With K the threshold on `c` below, a unique root exists when `b > 0, c < K` or \
         `b = 0, K > c > 0`, and none otherwise. When `b > 0` and K is finite the root \
         satisfies `0 < x < (K - c)/b`.\n",
    );
    let mut section = "";
    for e in all_entries() {
        if e.section != section {
            section = e.section;
            let _ = write!(out, "\n## {section}\n");
        }
        let _ = writeln!(out, "\n### `{}`\n", e.id);
        let _ = writeln!(out, "- equation: `{}`", e.equation);
        let _ = writeln!(out, "- density: `{}`", e.density_text);
        let _ = writeln!(out, "- parameters: {}", e.domain_text);
        let _ = writeln!(out, "- threshold K: {}", e.threshold_text);
        let bound = if e.threshold_text == "∞" {
            "none (critical value infinite)".to_string()
        } else {
            "(K - c)/b > x > 0 when b > 0".to_string()
        };
        let _ = writeln!(out, "- bound: {bound}");
        let tier = match e.tier {
            Tier::ClosedForm => "1 (closed form checked against quadrature)",
            Tier::QuadratureOnly => "2 (quadrature only)",
        };
        let _ = writeln!(out, "- tier: {tier}");
        if let Some(c) = e.zero_free {
            let _ = writeln!(out, "- zero-free claim: {} for |arg z| < {}π", c.function, c.half_angle);
        }
        if let Some(x) = e.extension {
            let kind = if x.removable { "removable point" } else { "value" };
            let _ = writeln!(out, "- extension at z = a: {kind}, S = value from the closed form's limit");
        }
    }
    out
}
