//! Text and LaTeX renderings of manifests.

use glmix::scalar::{ParamMono, Rational};
use glmix::{Coeff, MatrixDiffOp, Param, QuadNum, ScalarDiffOp};

use crate::job::{Item, Manifest};

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_param(p: Param) -> &'static str {
    match p {
        Param::K => "k",
        Param::Omega => "\\omega",
        Param::Nu => "\\nu",
        Param::Alpha => "\\alpha",
    }
}

fn latex_param_mono(m: &ParamMono) -> String {
    Param::ALL
        .iter()
        .filter(|p| m.0[p.index()] > 0)
        .map(|p| match m.0[p.index()] {
            1 => latex_param(*p).to_string(),
            e => format!("{}^{{{e}}}", latex_param(*p)),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `a + b\sqrt{2}` with the sign pulled out when the value is a single term.
fn latex_quad_signed(q: &QuadNum) -> (bool, String) {
    use num_traits::{One, Signed, Zero};
    let a = &q.a;
    let b = &q.b;
    if b.is_zero() {
        return (a.is_negative(), latex_rational(&a.abs()));
    }
    let sqrt = |r: &Rational| {
        if r.is_one() {
            "\\sqrt{2}".to_string()
        } else {
            format!("{}\\sqrt{{2}}", latex_rational(r))
        }
    };
    if a.is_zero() {
        return (b.is_negative(), sqrt(&b.abs()));
    }
    let sign = if b.is_negative() { "-" } else { "+" };
    (false, format!("({} {sign} {})", latex_rational(a), sqrt(&b.abs())))
}

pub fn latex_coeff(c: &Coeff) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, q)) in c.terms().enumerate() {
        let (neg, mag) = latex_quad_signed(q);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = latex_param_mono(m);
        match (mono.is_empty(), mag == "1") {
            (true, _) => out.push_str(&mag),
            (false, true) => out.push_str(&mono),
            (false, false) => out.push_str(&format!("{mag} {mono}")),
        }
    }
    out
}

pub fn latex_scalar_op(op: &ScalarDiffOp) -> String {
    if op.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in op.terms().enumerate() {
        let mut mono = String::new();
        for (v, &e) in m.xpow.iter().enumerate() {
            match e {
                0 => {}
                1 => mono.push_str(&format!("x_{}", v + 1)),
                _ => mono.push_str(&format!("x_{}^{{{e}}}", v + 1)),
            }
        }
        for (v, &e) in m.dpow.iter().enumerate() {
            match e {
                0 => {}
                1 => mono.push_str(&format!("\\partial_{}", v + 1)),
                _ => mono.push_str(&format!("\\partial_{}^{{{e}}}", v + 1)),
            }
        }
        let coeff = latex_coeff(c);
        let single = c.len() == 1;
        let body = match (mono.is_empty(), coeff.as_str()) {
            (true, _) => coeff.clone(),
            (false, "1") => mono,
            (false, "-1") => format!("-{mono}"),
            (false, _) if single => format!("{coeff}\\,{mono}"),
            (false, _) => format!("({coeff})\\,{mono}"),
        };
        if i > 0 {
            if let Some(rest) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
                continue;
            }
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

/// Matrix of differential operators as a `pmatrix`; scalars stay bare.
pub fn latex_operator(op: &MatrixDiffOp) -> String {
    if op.dim() == 1 {
        return latex_scalar_op(op.entry(0, 0));
    }
    let rows: Vec<String> = (0..op.dim())
        .map(|i| (0..op.dim()).map(|j| latex_scalar_op(op.entry(i, j))).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

fn latex_tex_name(name: &str) -> String {
    let t = name.replace('-', "^-").replace('+', "^+");
    match t.strip_prefix('T') {
        Some(rest) if rest.starts_with(|c: char| c.is_ascii_digit()) => format!("T_{rest}"),
        _ => match t.strip_prefix('E') {
            Some(rest) if !rest.is_empty() && rest != "0" => format!("E_{{{rest}}}"),
            Some("0") => "E_0".into(),
            _ => t,
        },
    }
}

pub fn text(m: &Manifest) -> String {
    let mut out = format!("{} [{}]\n", m.command, m.verdict);
    for item in &m.rendered {
        match item {
            Item::Operator { name, op } => out.push_str(&format!("{name} =\n{op}\n")),
            Item::Identity(s) => out.push_str(&format!(
                "{} {}{}\n",
                if s.pass { "PASS" } else { "FAIL" },
                s.name,
                if s.pass { String::new() } else { format!("  residual: {}", s.residual) }
            )),
            Item::Value { name, value } => out.push_str(&format!("{name} = {value}\n")),
            Item::Line(l) => out.push_str(&format!("{l}\n")),
        }
    }
    out
}

pub fn latex(m: &Manifest) -> String {
    let mut out = format!("% {} [{}]\n", m.command, m.verdict);
    for item in &m.rendered {
        match item {
            Item::Operator { name, op } => {
                out.push_str(&format!("\\[\n{} = {}\n\\]\n", latex_tex_name(name), latex_operator(op)))
            }
            Item::Identity(s) => out.push_str(&format!(
                "% {} {}\n",
                if s.pass { "PASS" } else { "FAIL" },
                s.name
            )),
            Item::Value { name, value } => out.push_str(&format!("\\[ {name} = {} \\]\n", latex_coeff(value))),
            Item::Line(l) => out.push_str(&format!("% {l}\n")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let c = &Coeff::frac(-2, 3) + &(&Coeff::param(Param::Omega) * &Coeff::int(4));
        assert_eq!(latex_coeff(&c), "-\\frac{2}{3} + 4 \\omega");
        assert_eq!(latex_coeff(&Coeff::sqrt2()), "\\sqrt{2}");
    }

    #[test]
    fn operators() {
        let op = ScalarDiffOp::monomial(vec![1, 0], vec![2, 0], Coeff::int(-2))
            .add(&ScalarDiffOp::monomial(vec![0, 1], vec![1, 1], Coeff::int(-6)));
        assert_eq!(latex_scalar_op(&op), "-6\\,x_2\\partial_1\\partial_2 - 2\\,x_1\\partial_1^{2}");
    }

    #[test]
    fn generator_names() {
        assert_eq!(latex_tex_name("T1+"), "T_1^+");
        assert_eq!(latex_tex_name("E12"), "E_{12}");
        assert_eq!(latex_tex_name("E0"), "E_0");
    }
}
