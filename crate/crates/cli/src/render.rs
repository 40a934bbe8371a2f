use std::fmt::Write;

use fakedeg_core::fakedeg::{ExpectedRow, TableRow, VerificationReport};
use fakedeg_core::rootsys::{parabolic_label, Num};
use fakedeg_core::{GroupType, IntPoly, OrbitLabel, RootSystem};
use serde::Serialize;

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialise");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn coords(c: &[Num]) -> String {
    format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

/// `1 + 2q + q^{10}`, from the plain rendering `1 + 2*q + q^10`.
pub fn latex_poly(p: &IntPoly) -> String {
    let plain = p.to_string().replace('*', "");
    let mut out = String::with_capacity(plain.len() + 8);
    let mut chars = plain.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(d) = chars.next_if(char::is_ascii_digit) {
                out.push(d);
            }
            out.push('}');
        }
    }
    out
}

#[derive(Serialize)]
struct OrbitInfo {
    label: OrbitLabel,
    size: usize,
    dominant: Vec<Num>,
    stabilizer: Vec<usize>,
    stabilizer_type: String,
}

#[derive(Serialize)]
pub struct Info {
    #[serde(rename = "type")]
    group_type: GroupType,
    rank: usize,
    order: u128,
    h: u32,
    degrees: Vec<u32>,
    exponents: Vec<u32>,
    codegrees: Vec<u32>,
    roots: usize,
    positive_roots: usize,
    crystallographic: bool,
    simply_laced: bool,
    orbits: Vec<OrbitInfo>,
}

impl Info {
    pub fn new(rs: &RootSystem) -> Self {
        let d = rs.datum();
        Info {
            group_type: rs.group_type(),
            rank: rs.rank(),
            order: d.order(),
            h: rs.h(),
            degrees: d.degrees.clone(),
            exponents: d.exponents.clone(),
            codegrees: d.codegrees.clone(),
            roots: rs.len(),
            positive_roots: rs.positive_roots().count(),
            crystallographic: d.crystallographic,
            simply_laced: d.simply_laced,
            orbits: rs
                .orbits()
                .iter()
                .map(|o| OrbitInfo {
                    label: o.label,
                    size: o.members.len(),
                    dominant: rs.roots()[o.dominant].coords.clone(),
                    stabilizer: o.stabilizer.iter().map(|i| i + 1).collect(),
                    stabilizer_type: parabolic_label(&o.stabilizer_type),
                })
                .collect(),
        }
    }
}

pub fn info_text(rs: &RootSystem) -> String {
    let i = Info::new(rs);
    let mut s = String::new();
    let _ = writeln!(s, "type       {}", i.group_type);
    let _ = writeln!(s, "rank       {}", i.rank);
    let _ = writeln!(s, "order      {}", i.order);
    let _ = writeln!(s, "h          {}", i.h);
    let _ = writeln!(s, "degrees    {}", join(&i.degrees));
    let _ = writeln!(s, "exponents  {}", join(&i.exponents));
    let _ = writeln!(s, "codegrees  {}", join(&i.codegrees));
    let _ = writeln!(s, "roots      {} ({} positive)", i.roots, i.positive_roots);
    for o in &i.orbits {
        let _ = writeln!(
            s,
            "orbit      {}: {} roots, dominant {}, stabiliser {}",
            o.label,
            o.size,
            coords(&o.dominant),
            o.stabilizer_type
        );
    }
    s
}

#[derive(Serialize)]
pub struct FakeDegree {
    #[serde(rename = "type")]
    pub group_type: GroupType,
    pub h: u32,
    pub orbit: String,
    pub f: IntPoly,
    pub quotient: IntPoly,
    pub gcd: IntPoly,
}

impl FakeDegree {
    pub fn text(&self) -> String {
        format!(
            "type        {}\norbit       {}\nf(q)        {}\nf(q)/[h]_q  {}\ngcd         {}\n",
            self.group_type, self.orbit, self.f, self.quotient, self.gcd
        )
    }

    pub fn csv(&self) -> String {
        format!(
            "type,h,orbit,f,quotient,gcd\n{},{},{},{},{},{}\n",
            self.group_type, self.h, self.orbit, self.f, self.quotient, self.gcd
        )
    }

    pub fn latex(&self) -> String {
        format!(
            "% {} ({})\nf(q) = {}\n\\frac{{f(q)}}{{[{}]_q}} = {}\n\\gcd = {}\n",
            self.group_type.latex(),
            self.orbit,
            latex_poly(&self.f),
            self.h,
            latex_poly(&self.quotient),
            latex_poly(&self.gcd)
        )
    }
}

#[derive(Serialize)]
pub struct Expected {
    quotient: String,
    gcd: String,
    stabilizer: String,
    #[serde(skip)]
    quotient_latex: String,
    #[serde(skip)]
    gcd_latex: String,
}

#[derive(Serialize)]
pub struct Row {
    #[serde(rename = "type")]
    group_type: GroupType,
    h: u32,
    orbit: OrbitLabel,
    stabilizer: String,
    quotient: IntPoly,
    gcd: IntPoly,
    expected: Option<Expected>,
    pub matches: bool,
}

impl Row {
    pub fn new(computed: TableRow, expected: Option<ExpectedRow>) -> Self {
        let matches = expected.as_ref().is_some_and(|e| {
            e.quotient.expand().ok().as_ref() == Some(&computed.quotient)
                && e.gcd.expand().ok().as_ref() == Some(&computed.gcd)
                && e.stabilizer == computed.stabilizer
        });
        Row {
            group_type: computed.group_type,
            h: computed.h,
            orbit: computed.orbit,
            stabilizer: parabolic_label(&computed.stabilizer),
            quotient: computed.quotient,
            gcd: computed.gcd,
            expected: expected.map(|e| Expected {
                quotient: e.quotient.to_string(),
                gcd: e.gcd.to_string(),
                stabilizer: parabolic_label(&e.stabilizer),
                quotient_latex: e.quotient.latex(),
                gcd_latex: e.gcd.latex(),
            }),
            matches,
        }
    }
}

pub fn table_text(rows: &[Row]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<8} {:>3}  {:<6} {:<14} {:<40} {:<24} expected",
        "type", "h", "orbit", "stabiliser", "f/[h]_q", "gcd"
    );
    for r in rows {
        let expected = r
            .expected
            .as_ref()
            .map_or("-".to_string(), |e| format!("{} ; {}", e.quotient, e.gcd));
        let _ = writeln!(
            s,
            "{:<8} {:>3}  {:<6} {:<14} {:<40} {:<24} {}{}",
            r.group_type.to_string(),
            r.h,
            r.orbit.as_str(),
            r.stabilizer,
            r.quotient.to_string(),
            r.gcd.to_string(),
            expected,
            if r.matches { "" } else { "  MISMATCH" }
        );
    }
    s
}

pub fn table_csv(rows: &[Row]) -> String {
    let mut s = String::from("type,h,orbit,stabilizer,quotient,gcd\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            r.group_type, r.h, r.orbit, r.stabilizer, r.quotient, r.gcd
        );
    }
    s
}

pub fn table_latex(rows: &[Row]) -> String {
    let mut s = String::new();
    s.push_str("\\begin{tabular}{lllllll}\n");
    s.push_str("$W$ & $h$ & orbit & $W_{\\alpha_0}$ & $f^{\\Phi'}(q)/[h]_q$ & $\\gcd([h]_q, \\sum q^{d^*_i})$ & expected \\\\\n\\hline\n");
    for r in rows {
        let stab = if r.stabilizer == "1" {
            "1".into()
        } else {
            r.stabilizer.replace(" x ", " \\times ")
        };
        let expected = r.expected.as_ref().map_or("--".to_string(), |e| {
            format!("${}$; ${}$", e.quotient_latex, e.gcd_latex)
        });
        let _ = writeln!(
            s,
            "${}$ & ${}$ & {} & ${}$ & ${}$ & ${}$ & {} \\\\",
            r.group_type.latex(),
            r.h,
            r.orbit,
            stab,
            latex_poly(&r.quotient),
            latex_poly(&r.gcd),
            expected
        );
    }
    s.push_str("\\end{tabular}\n");
    s
}

#[derive(Serialize)]
struct SuiteBounds {
    max_rank: usize,
    max_m: u32,
    bfs_bound: u128,
}

#[derive(Serialize)]
pub struct Suite<'a> {
    bounds: SuiteBounds,
    types: usize,
    claims: usize,
    failures: usize,
    reports: &'a [VerificationReport],
}

impl<'a> Suite<'a> {
    pub fn new(reports: &'a [VerificationReport], max_rank: usize, max_m: u32, bfs_bound: u128) -> Self {
        Suite {
            bounds: SuiteBounds {
                max_rank,
                max_m,
                bfs_bound,
            },
            types: reports.len(),
            claims: reports.iter().map(|r| r.claims.len()).sum(),
            failures: reports.iter().map(|r| r.failures().count()).sum(),
            reports,
        }
    }
}
