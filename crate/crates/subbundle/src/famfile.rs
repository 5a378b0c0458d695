//! The `.fam` family-description file format: a line-oriented grammar with
//! `#` comments.
//!
//! ```text
//! field Q                      # or: field Fp 5
//! base_vars x y
//! fiber_vars z w
//! base_ideal y^2 - x^3
//! family y^2 - x^3 ; y*z - x*w ; w^2 - x*z^2 ; x^2*z - y*w
//! rank 1
//! point 0 0
//! param t : t^2, t^3
//! sample t = -1, 1, 2
//! kernel_check
//! map x -> t^2
//! map y -> t^3
//! map z -> z
//! map w -> t*z
//! claimed y^2 - x^3 ; y*z - x*w ; w^2 - x*z^2 ; x^2*z - y*w
//! closure by x
//! ```

use crate::bundle::{BundleError, FamilySpec, Parametrization};
use crate::coeff::{FieldElement, FieldSpec};
use crate::poly::{parse_polynomial, Ctx, Polynomial, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("validation error at line {line}: {msg}")]
    Validation { line: usize, msg: String },
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

impl FileError {
    fn parse(line: usize, col: usize, msg: impl Into<String>) -> FileError {
        FileError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn validation(line: usize, msg: impl Into<String>) -> FileError {
        FileError::Validation {
            line,
            msg: msg.into(),
        }
    }
}

fn lift_bundle_error(line: usize, e: BundleError) -> FileError {
    match e {
        BundleError::Ideal(crate::ideal::IdealError::ResourceLimit(m)) => {
            FileError::ResourceLimit(m)
        }
        other => FileError::validation(line, other.to_string()),
    }
}

/// The optional kernel-verification block.
#[derive(Debug, Clone)]
pub struct KernelCheck {
    pub images: Vec<(String, Polynomial)>,
    pub claimed: Vec<Polynomial>,
    /// Source-variable context the claimed generators live in.
    pub source_ctx: Ctx,
}

/// A parsed family file: the FamilySpec plus optional directives.
#[derive(Debug, Clone)]
pub struct FamilyFile {
    pub spec: FamilySpec,
    pub kernel_check: Option<KernelCheck>,
    pub closure_by: Option<Polynomial>,
}

struct RawParam {
    line: usize,
    name: String,
    images_text: Vec<String>,
    samples: Vec<String>,
}

fn check_user_names(names: &[String], line: usize) -> Result<(), FileError> {
    for n in names {
        if n.starts_with('_') {
            return Err(FileError::validation(
                line,
                format!("variable name `{n}` is reserved (leading underscore)"),
            ));
        }
        if !n.chars().next().map(|c| c.is_ascii_alphabetic()).unwrap_or(false)
            || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(FileError::validation(
                line,
                format!("`{n}` is not a valid variable name"),
            ));
        }
    }
    Ok(())
}

fn identifiers_in(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_ascii_alphabetic() || chars[i] == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            if !out.contains(&name) {
                out.push(name);
            }
        } else {
            i += 1;
        }
    }
    out
}

pub fn parse_family_file(text: &str) -> Result<FamilyFile, FileError> {
    let mut field: Option<(usize, FieldSpec)> = None;
    let mut base_vars: Option<(usize, Vec<String>)> = None;
    let mut fiber_vars: Option<(usize, Vec<String>)> = None;
    let mut base_ideal_text: Option<(usize, Vec<String>)> = None;
    let mut family_text: Option<(usize, Vec<String>)> = None;
    let mut rank: Option<(usize, usize)> = None;
    let mut point_lines: Vec<(usize, Vec<String>)> = Vec::new();
    let mut params: Vec<RawParam> = Vec::new();
    let mut in_kernel_block = false;
    let mut map_lines: Vec<(usize, String, String)> = Vec::new();
    let mut claimed_text: Option<(usize, Vec<String>)> = None;
    let mut closure_text: Option<(usize, String)> = None;

    for (lineno0, raw) in text.lines().enumerate() {
        let line = lineno0 + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        match keyword {
            "field" => {
                let mut it = rest.split_whitespace();
                match it.next() {
                    Some("Q") => field = Some((line, FieldSpec::Rationals)),
                    Some("Fp") => {
                        let p: u64 = it
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| FileError::parse(line, 1, "expected `field Fp <prime>`"))?;
                        let spec = FieldSpec::prime_field(p)
                            .map_err(|e| FileError::validation(line, e.to_string()))?;
                        field = Some((line, spec));
                    }
                    _ => return Err(FileError::parse(line, 1, "expected `field Q` or `field Fp <prime>`")),
                }
            }
            "base_vars" => {
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(FileError::parse(line, 1, "base_vars needs at least one name"));
                }
                check_user_names(&names, line)?;
                base_vars = Some((line, names));
            }
            "fiber_vars" => {
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(FileError::parse(line, 1, "fiber_vars needs at least one name"));
                }
                check_user_names(&names, line)?;
                fiber_vars = Some((line, names));
            }
            "base_ideal" => {
                base_ideal_text = Some((line, split_polys(rest)));
            }
            "family" => {
                family_text = Some((line, split_polys(rest)));
            }
            "rank" => {
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| FileError::parse(line, 1, "expected `rank <non-negative integer>`"))?;
                rank = Some((line, d));
            }
            "point" => {
                let coords: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if coords.is_empty() {
                    return Err(FileError::parse(line, 1, "point needs coordinates"));
                }
                point_lines.push((line, coords));
            }
            "param" => {
                let (name, images) = rest
                    .split_once(':')
                    .ok_or_else(|| FileError::parse(line, 1, "expected `param <t> : <poly>, ...`"))?;
                let name = name.trim().to_string();
                check_user_names(std::slice::from_ref(&name), line)?;
                let images_text: Vec<String> =
                    images.split(',').map(|s| s.trim().to_string()).collect();
                params.push(RawParam {
                    line,
                    name,
                    images_text,
                    samples: Vec::new(),
                });
            }
            "sample" => {
                let (name, values) = rest
                    .split_once('=')
                    .ok_or_else(|| FileError::parse(line, 1, "expected `sample <t> = v1, v2, ...`"))?;
                let name = name.trim();
                let p = params
                    .iter_mut()
                    .find(|p| p.name == name)
                    .ok_or_else(|| {
                        FileError::validation(line, format!("sample for undeclared parameter `{name}`"))
                    })?;
                p.samples
                    .extend(values.split(',').map(|s| s.trim().to_string()));
            }
            "kernel_check" => {
                in_kernel_block = true;
                if !rest.is_empty() {
                    return Err(FileError::parse(line, 1, "`kernel_check` takes no arguments"));
                }
            }
            "map" => {
                if !in_kernel_block {
                    return Err(FileError::parse(line, 1, "`map` outside a kernel_check block"));
                }
                let (var, img) = rest
                    .split_once("->")
                    .ok_or_else(|| FileError::parse(line, 1, "expected `map <var> -> <poly>`"))?;
                map_lines.push((line, var.trim().to_string(), img.trim().to_string()));
            }
            "claimed" => {
                if !in_kernel_block {
                    return Err(FileError::parse(line, 1, "`claimed` outside a kernel_check block"));
                }
                claimed_text = Some((line, split_polys(rest)));
                in_kernel_block = false;
            }
            "closure" => {
                let poly = rest
                    .strip_prefix("by")
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .ok_or_else(|| FileError::parse(line, 1, "expected `closure by <poly>`"))?;
                closure_text = Some((line, poly.to_string()));
            }
            other => {
                return Err(FileError::parse(line, 1, format!("unknown directive `{other}`")));
            }
        }
    }

    let (_, field) = field.ok_or_else(|| FileError::parse(0, 0, "missing `field` directive"))?;
    let (bline, base_names) =
        base_vars.ok_or_else(|| FileError::parse(0, 0, "missing `base_vars` directive"))?;
    let (_, fiber_names) =
        fiber_vars.ok_or_else(|| FileError::parse(0, 0, "missing `fiber_vars` directive"))?;
    let (fline, family_polys) =
        family_text.ok_or_else(|| FileError::parse(0, 0, "missing `family` directive"))?;
    let (_, expected_dim) = rank.ok_or_else(|| FileError::parse(0, 0, "missing `rank` directive"))?;

    let mut all_names = base_names.clone();
    all_names.extend(fiber_names.clone());
    let split = base_names.len();
    let ctx = VariableContext::with_split(all_names, split)
        .map_err(|e| FileError::validation(bline, e.to_string()))?;
    let base_ctx = VariableContext::new(base_names.clone())
        .map_err(|e| FileError::validation(bline, e.to_string()))?;

    let parse_in = |texts: &[String], c: &Ctx, line: usize| -> Result<Vec<Polynomial>, FileError> {
        texts
            .iter()
            .map(|t| {
                parse_polynomial(t, c, field)
                    .map_err(|e| FileError::parse(line, e.col, e.msg))
            })
            .collect()
    };

    let base_gens = match &base_ideal_text {
        Some((line, texts)) => parse_in(texts, &base_ctx, *line)?,
        None => Vec::new(),
    };
    let family_gens = parse_in(&family_polys, &ctx, fline)?;

    let mut declared_points = Vec::new();
    for (line, coords) in &point_lines {
        let pt: Vec<FieldElement> = coords
            .iter()
            .map(|c| {
                field
                    .parse_element(c)
                    .map_err(|e| FileError::parse(*line, 1, e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        declared_points.push((*line, pt));
    }

    let mut parametrizations = Vec::new();
    for rp in &params {
        let pctx = VariableContext::new(vec![rp.name.clone()])
            .map_err(|e| FileError::validation(rp.line, e.to_string()))?;
        let images = parse_in(&rp.images_text, &pctx, rp.line)?;
        let samples: Vec<FieldElement> = rp
            .samples
            .iter()
            .map(|s| {
                field
                    .parse_element(s)
                    .map_err(|e| FileError::parse(rp.line, 1, e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        parametrizations.push(Parametrization {
            param: rp.name.clone(),
            images,
            samples,
        });
    }

    // Validate points individually so the error cites the offending line.
    {
        let base_ideal = crate::ideal::Ideal::new(&base_ctx, field, base_gens.clone());
        for (line, coords) in &declared_points {
            for g in base_ideal.generators() {
                if !g.eval(coords).is_zero() {
                    return Err(FileError::validation(
                        *line,
                        format!(
                            "point ({}) does not satisfy base generator {g}",
                            coords
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        ),
                    ));
                }
            }
        }
    }

    let spec = FamilySpec::new(
        field,
        ctx.clone(),
        base_gens,
        family_gens,
        expected_dim,
        declared_points.into_iter().map(|(_, p)| p).collect(),
        parametrizations,
    )
    .map_err(|e| lift_bundle_error(fline, e))?;

    let kernel_check = match claimed_text {
        None if map_lines.is_empty() => None,
        None => {
            return Err(FileError::parse(
                map_lines[0].0,
                1,
                "kernel_check block has `map` lines but no `claimed` line",
            ))
        }
        Some((cline, texts)) => {
            // Source variables are the mapped ones, in declaration order; the
            // target context is inferred from identifiers in the images.
            let source_names: Vec<String> =
                map_lines.iter().map(|(_, v, _)| v.clone()).collect();
            check_user_names(&source_names, cline)?;
            let mut target_names: Vec<String> = Vec::new();
            for (_, _, img) in &map_lines {
                for id in identifiers_in(img) {
                    if !target_names.contains(&id) {
                        target_names.push(id);
                    }
                }
            }
            check_user_names(&target_names, cline)?;
            let target_ctx = VariableContext::new(target_names)
                .map_err(|e| FileError::validation(cline, e.to_string()))?;
            let mut images = Vec::new();
            for (line, var, img) in &map_lines {
                let p = parse_polynomial(img, &target_ctx, field)
                    .map_err(|e| FileError::parse(*line, e.col, e.msg))?;
                images.push((var.clone(), p));
            }
            let source_ctx = VariableContext::new(source_names)
                .map_err(|e| FileError::validation(cline, e.to_string()))?;
            let claimed = parse_in(&texts, &source_ctx, cline)?;
            Some(KernelCheck {
                images,
                claimed,
                source_ctx,
            })
        }
    };

    let closure_by = match closure_text {
        None => None,
        Some((line, t)) => Some(
            parse_polynomial(&t, &ctx, field)
                .map_err(|e| FileError::parse(line, e.col, e.msg))?,
        ),
    };

    Ok(FamilyFile {
        spec,
        kernel_check,
        closure_by,
    })
}

fn split_polys(text: &str) -> Vec<String> {
    text.split(';')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Canonical text rendering; parsing it back yields an equal FamilySpec.
pub fn render_canonical(file: &FamilyFile) -> String {
    let spec = &file.spec;
    let mut out = String::new();
    match spec.field {
        FieldSpec::Rationals => out.push_str("field Q\n"),
        FieldSpec::PrimeField(p) => out.push_str(&format!("field Fp {p}\n")),
    }
    out.push_str(&format!("base_vars {}\n", spec.base_context.names().join(" ")));
    out.push_str(&format!("fiber_vars {}\n", spec.fiber_context.names().join(" ")));
    if !spec.base_ideal.generators().is_empty() {
        let gens: Vec<String> = spec
            .base_ideal
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        out.push_str(&format!("base_ideal {}\n", gens.join(" ; ")));
    }
    let gens: Vec<String> = spec
        .family_ideal
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    out.push_str(&format!("family {}\n", gens.join(" ; ")));
    out.push_str(&format!("rank {}\n", spec.expected_dim));
    for pt in &spec.points {
        if matches!(pt.provenance, crate::bundle::Provenance::Declared) {
            let coords: Vec<String> = pt.coords.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("point {}\n", coords.join(" ")));
        }
    }
    for pz in &spec.parametrizations {
        let imgs: Vec<String> = pz.images.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("param {} : {}\n", pz.param, imgs.join(", ")));
        if !pz.samples.is_empty() {
            let vals: Vec<String> = pz.samples.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("sample {} = {}\n", pz.param, vals.join(", ")));
        }
    }
    if let Some(kc) = &file.kernel_check {
        out.push_str("kernel_check\n");
        for (v, img) in &kc.images {
            out.push_str(&format!("map {v} -> {img}\n"));
        }
        let claimed: Vec<String> = kc.claimed.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("claimed {}\n", claimed.join(" ; ")));
    }
    if let Some(g) = &file.closure_by {
        out.push_str(&format!("closure by {g}\n"));
    }
    out
}

/// Structural equality of the parsed data (caches and notices ignored).
pub fn specs_equal(a: &FamilySpec, b: &FamilySpec) -> bool {
    a.field == b.field
        && a.context.names() == b.context.names()
        && a.context.block_split() == b.context.block_split()
        && a.base_ideal.generators() == b.base_ideal.generators()
        && a.family_ideal.generators() == b.family_ideal.generators()
        && a.expected_dim == b.expected_dim
        && a.points == b.points
        && a.parametrizations.len() == b.parametrizations.len()
        && a
            .parametrizations
            .iter()
            .zip(&b.parametrizations)
            .all(|(x, y)| x.param == y.param && x.images == y.images && x.samples == y.samples)
}
