//! Grid figures: the groups of a point-level ring over a window of gradings,
//! with the fixed-set dimension x^G horizontal and the total dimension |x|
//! vertical. For p odd the window is the coset α + ⟨R, M_1⟩ of an element
//! α ∈ RO_0(G), and only the gradings in that coset are drawn.
//!
//! Each cell carries a schematic label in the notation of the standard
//! pictures (`e^2 xi^-1`, `mu^{a,a} e1^-1 kappa`, …, with `a` standing for α)
//! and the concrete Mackey functor and canonical basis of the engine.

use crate::error::{Error, Result};
use crate::gradings::{GradingROG, PrimeConfig};
use crate::point_rings::{group_at, Cell, CellKind, Ring};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize)]
pub struct GridCell {
    pub fixed: i64,
    pub dim: i64,
    pub grading: GradingROG,
    /// Schematic functor label; "." for the zero functor.
    pub functor: String,
    /// Schematic generator label; "." for the zero functor.
    pub generator: String,
    /// The functor as computed, e.g. `A[2]` or `<Z/5>`.
    pub mackey: String,
    pub gg_basis: Vec<String>,
    pub ge_basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Grid {
    pub p: i64,
    pub ring: Ring,
    pub coset: GradingROG,
    pub fixed_range: (i64, i64),
    pub dim_range: (i64, i64),
    pub cells: Vec<GridCell>,
}

/// `name^k` with k = 1 shown as `name` and k = 0 dropped.
fn pow(name: &str, k: i64) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    }
}

fn join(parts: impl IntoIterator<Item = Option<String>>) -> String {
    let v: Vec<String> = parts.into_iter().flatten().collect();
    if v.is_empty() {
        "1".into()
    } else {
        v.join(" ")
    }
}

fn paren(s: String) -> String {
    format!("({s})")
}

/// Schematic (functor, generator) labels of a nonzero cell.
fn labels(c: &Cell) -> (String, String) {
    use CellKind::*;
    let x = &c.x;
    let (f, d) = (x.fixed(), x.dim());
    let two = x.pc.is_two();
    let functor = if two {
        c.catalog().name(2)
    } else {
        match c.kind {
            A => "A[nu]".into(),
            ConcZp => "<Z/p>".into(),
            _ => c.catalog().name(x.p()).replace(&format!("/{}", x.p()), "/p"),
        }
    };
    let s = |v: &str| Some(v.to_string());
    let (e, xi, dxi) = if two { ("e", "xi", "dxi") } else { ("e1", "xi1", "dxi1") };
    // Exponent of e in the grading |x| (e has dimension 1 for p = 2, 2 otherwise).
    let ed = if two { 1 } else { 2 };
    let mu = || if two { None } else { s("mu^{a,a}") };
    let lam = |ring: Ring| match (two, ring) {
        (true, _) => None,
        (false, Ring::S0RZ) => s("lam^a"),
        (false, _) => s("lam^{a,a^-1}"),
    };
    let iota = |k: i64| {
        if two {
            paren(pow("iota", k).unwrap_or_else(|| "iota^0".into()))
        } else {
            paren(join([s("iota^a"), pow("iota1", k)]))
        }
    };
    let gen = match (c.ring, c.kind) {
        (Ring::S0, A) => {
            if two {
                "1".into()
            } else {
                "{mu^{a,a}, iota^a}".into()
            }
        }
        (Ring::S0 | Ring::S0RZ, RZ) => join([lam(c.ring), pow(xi, -f / 2)]),
        (Ring::S0 | Ring::S0RZ, LZ) | (_, RZMinus) => iota(if two { -f } else { -f / 2 }),
        (Ring::S0 | Ring::S0RZ, Delta) if d == 0 => iota(-f),
        (Ring::S0, ConcZ) => join([mu(), pow(e, d / ed)]),
        (Ring::S0 | Ring::S0RZ, ConcZp) => join([lam(c.ring), pow(e, d / ed), pow(xi, -f / 2)]),
        (Ring::S0, ConcZKappa) => join([mu(), pow(e, d / ed), s("kappa")]),
        (Ring::S0 | Ring::S0RZ, Delta) => {
            let pre = if c.ring == Ring::S0RZ { lam(c.ring) } else { mu() };
            join([pre, pow(e, -((1 - d) / ed)), pow(dxi, -(f - 1) / 2)])
        }
        (Ring::S0Conc, ConcZKappa) => join([s("e^a").filter(|_| !two), pow(e, d / ed), s("kappa")]),
        (Ring::EG, RZ) => join([s("xi^a").filter(|_| !two), pow(xi, -f / 2)]),
        (Ring::EG, ConcZp) => join([pow(e, d / ed), s("xi^a").filter(|_| !two), pow(xi, -f / 2)]),
        (Ring::TEG, ConcZKappa) => join([s("e^a").filter(|_| !two), pow(e, d / ed), s("kappa")]),
        (Ring::TEG, Delta) => join([s("e^a").filter(|_| !two), pow(e, (d - 1) / ed), pow(dxi, -(f - 1) / 2)]),
        (r, k) => format!("?{r}:{k:?}"),
    };
    (functor, gen)
}

/// The grading with fixed dimension f and total dimension d in the coset
/// α + ⟨R, M_1⟩, if there is one.
pub fn coset_grading(alpha: &GradingROG, f: i64, d: i64) -> Option<GradingROG> {
    let pc = alpha.pc;
    if pc.is_two() {
        return Some(*alpha + GradingROG::new(pc, f, &[d - f]).expect("valid p = 2 grading"));
    }
    if (d - f).rem_euclid(2) != 0 {
        return None;
    }
    Some(*alpha + GradingROG::trivial(pc, f) + ((d - f) / 2) * GradingROG::mk(pc, 1))
}

/// The grid of `ring` over x^G ∈ [fmin, fmax], |x| ∈ [dmin, dmax] in the
/// coset of `alpha` (which must lie in RO_0(G)).
pub fn emit_grid(ring: Ring, alpha: GradingROG, fixed_range: (i64, i64), dim_range: (i64, i64)) -> Result<Grid> {
    if !alpha.is_ro0() {
        return Err(Error::NotInRo0(alpha.to_string()));
    }
    let (fmin, fmax) = fixed_range;
    let (dmin, dmax) = dim_range;
    if fmax - fmin > 64 || dmax - dmin > 64 {
        return Err(Error::SizeBound("grid windows are limited to 64 cells per side".into()));
    }
    let mut cells = vec![];
    for d in (dmin..=dmax).rev() {
        for f in fmin..=fmax {
            let Some(x) = coset_grading(&alpha, f, d) else {
                continue;
            };
            let info = group_at(ring, x);
            let c = Cell::new(ring, x);
            let (functor, generator) =
                if c.kind == CellKind::Zero { (".".to_string(), ".".to_string()) } else { labels(&c) };
            cells.push(GridCell {
                fixed: f,
                dim: d,
                grading: x,
                functor,
                generator,
                mackey: info.functor.label.unwrap_or_default(),
                gg_basis: info.gg_basis,
                ge_basis: info.ge_basis,
            });
        }
    }
    Ok(Grid { p: alpha.p(), ring, coset: alpha, fixed_range, dim_range, cells })
}

/// The symmetric window |x^G| ≤ w, |x| ≤ w.
pub fn emit_window(ring: Ring, alpha: GradingROG, w: i64) -> Result<Grid> {
    emit_grid(ring, alpha, (-w, w), (-w, w))
}

/// The p = 2 grid, or the p odd grid of the coset of 0.
pub fn emit_default(ring: Ring, pc: PrimeConfig, w: i64) -> Result<Grid> {
    emit_window(ring, GradingROG::zero(pc), w)
}

impl Grid {
    pub fn cell(&self, f: i64, d: i64) -> Option<&GridCell> {
        self.cells.iter().find(|c| c.fixed == f && c.dim == d)
    }

    /// Two text tables, functors then generators, with |x| decreasing down
    /// the rows. Cells outside the coset are blank.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let title = if self.p == 2 {
            format!("{} (p = 2)", self.ring)
        } else {
            format!("{} (p = {}), coset {} + <R, M1>", self.ring, self.p, self.coset)
        };
        let _ = writeln!(out, "{title}");
        for (name, pick) in [("groups", 0), ("generators", 1)] {
            let _ = writeln!(out, "\n{name}:");
            let (fmin, fmax) = self.fixed_range;
            let label = |c: &GridCell| if pick == 0 { c.functor.clone() } else { c.generator.clone() };
            let mut widths = vec![0usize; (fmax - fmin + 1) as usize];
            for c in &self.cells {
                let w = &mut widths[(c.fixed - fmin) as usize];
                *w = (*w).max(label(c).chars().count()).max(c.fixed.to_string().len());
            }
            let mut header = format!("{:>5} |", "|x|");
            for f in fmin..=fmax {
                let _ = write!(header, " {:^w$}", f, w = widths[(f - fmin) as usize]);
            }
            let _ = writeln!(out, "{header}");
            let _ = writeln!(out, "{}", "-".repeat(header.chars().count()));
            for d in (self.dim_range.0..=self.dim_range.1).rev() {
                let mut line = format!("{d:>5} |");
                for f in fmin..=fmax {
                    let w = widths[(f - fmin) as usize];
                    let s = self.cell(f, d).map(label).unwrap_or_default();
                    let _ = write!(line, " {s:^w$}");
                }
                let _ = writeln!(out, "{}", line.trim_end());
            }
            let _ = writeln!(out, "{:>5}   x^G →", "");
        }
        out
    }

    /// An SVG drawing with the same axes: one box per cell holding the
    /// functor over the generator.
    pub fn to_svg(&self) -> String {
        let (fmin, fmax) = self.fixed_range;
        let (dmin, dmax) = self.dim_range;
        let (cw, ch, m) = (110.0, 44.0, 40.0);
        let width = m * 2.0 + cw * (fmax - fmin + 1) as f64;
        let height = m * 2.0 + ch * (dmax - dmin + 1) as f64;
        let xpos = |f: i64| m + cw * (f - fmin) as f64;
        let ypos = |d: i64| m + ch * (dmax - d) as f64;
        let esc = |s: &str| s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="monospace" font-size="10">"#
        );
        if (fmin..=fmax).contains(&0) {
            let x = xpos(0) + cw / 2.0;
            let _ = writeln!(s, r#"<line x1="{x}" y1="{m}" x2="{x}" y2="{}" stroke="gray"/>"#, height - m);
        }
        if (dmin..=dmax).contains(&0) {
            let y = ypos(0) + ch / 2.0;
            let _ = writeln!(s, r#"<line x1="{m}" y1="{y}" x2="{}" y2="{y}" stroke="gray"/>"#, width - m);
        }
        for c in &self.cells {
            let (x, y) = (xpos(c.fixed) + cw / 2.0, ypos(c.dim) + ch / 2.0);
            if c.functor == "." {
                let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="1.5"/>"#);
                continue;
            }
            let _ = writeln!(s, r#"<text x="{x}" y="{}" text-anchor="middle">{}</text>"#, y - 3.0, esc(&c.functor));
            let _ = writeln!(
                s,
                r##"<text x="{x}" y="{}" text-anchor="middle" fill="#336">{}</text>"##,
                y + 10.0,
                esc(&c.generator)
            );
        }
        let _ = writeln!(s, "</svg>");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: i64) -> PrimeConfig {
        PrimeConfig::new(p).unwrap()
    }

    #[test]
    fn p2_point_labels() {
        let g = emit_default(Ring::S0, pc(2), 5).unwrap();
        let at = |f, d| g.cell(f, d).unwrap().generator.clone();
        assert_eq!(at(0, 0), "1");
        assert_eq!(at(-4, 4), "e^4 xi^2");
        assert_eq!(at(-3, 0), "(iota^3)");
        assert_eq!(at(3, -1), "e^-2 dxi^-1");
        assert_eq!(at(0, -2), "e^-2 kappa");
        assert_eq!(g.cell(1, 1).unwrap().functor, ".");
    }

    #[test]
    fn odd_coset_skips_other_parity() {
        let g = emit_default(Ring::S0, pc(5), 4).unwrap();
        assert!(g.cell(1, 0).is_none());
        assert_eq!(g.cell(0, 0).unwrap().functor, "A[nu]");
        assert_eq!(g.cell(3, -1).unwrap().generator, "mu^{a,a} e1^-1 dxi1^-1");
        let text = g.to_text();
        assert!(text.contains("A[nu]"));
        assert!(g.to_svg().starts_with("<svg"));
    }
}
