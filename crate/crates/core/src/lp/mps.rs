use std::fmt::Write;

use super::{LinearProgram, Sense};

/// Formats `v` in at most 12 characters (the width of a numeric field).
fn number(v: f64) -> String {
    let plain = format!("{v}");
    if plain.len() <= 12 {
        return plain;
    }
    for digits in (0..=6).rev() {
        let s = format!("{v:.digits$e}");
        if s.len() <= 12 {
            return s;
        }
    }
    format!("{v:.0e}")
}

fn row_name(i: usize) -> String {
    format!("R{:07}", i + 1)
}

fn col_name(j: usize) -> String {
    format!("C{:07}", j + 1)
}

/// One fixed-format line: fields start at columns 2, 5, 15, 25 (and 40, 50).
fn line(out: &mut String, code: &str, name: &str, entries: &[(&str, String)]) {
    let mut s = format!(" {code:<2} {name:<8}");
    for (k, (key, value)) in entries.iter().enumerate() {
        if k == 0 {
            let _ = write!(s, "  {key:<8}  {value:>12}");
        } else {
            let _ = write!(s, "   {key:<8}  {value:>12}");
        }
    }
    out.push_str(s.trim_end());
    out.push('\n');
}

/// Writes `lp` in fixed-format MPS. Rows are named `R0000001…`, columns
/// `C0000001…`, the objective row `OBJ`. Columns flagged in `integer_mask` are
/// wrapped in `MARKER INTORG/INTEND` blocks.
pub fn write_mps(lp: &LinearProgram, name: &str, integer_mask: Option<&[bool]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "NAME          {name}");
    out.push_str("ROWS\n");
    line(&mut out, "N", "OBJ", &[]);
    for (i, row) in lp.rows().iter().enumerate() {
        let code = match row.sense {
            Sense::Le => "L",
            Sense::Ge => "G",
            Sense::Eq => "E",
        };
        line(&mut out, code, &row_name(i), &[]);
    }

    let mut columns: Vec<Vec<(usize, f64)>> = vec![Vec::new(); lp.num_vars()];
    for (i, row) in lp.rows().iter().enumerate() {
        for &(j, a) in &row.coeffs {
            columns[j].push((i, a));
        }
    }
    for col in &mut columns {
        col.sort_by_key(|&(i, _)| i);
        col.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
    }

    out.push_str("COLUMNS\n");
    let is_int = |j: usize| integer_mask.is_some_and(|m| m.get(j).copied().unwrap_or(false));
    let mut in_marker = false;
    let mut markers = 0;
    for (j, col) in columns.iter().enumerate() {
        if is_int(j) != in_marker {
            let tag = if in_marker { "'INTEND'" } else { "'INTORG'" };
            let _ = writeln!(out, "    {:<8}  'MARKER'{:17}{tag}", format!("MARKER{markers}"), "");
            markers += 1;
            in_marker = !in_marker;
        }
        let cname = col_name(j);
        let mut entries: Vec<(String, f64)> = Vec::new();
        let c = lp.objective()[j];
        if c != 0.0 || col.is_empty() {
            entries.push(("OBJ".to_string(), c));
        }
        entries.extend(col.iter().map(|&(i, a)| (row_name(i), a)));
        for pair in entries.chunks(2) {
            let fields: Vec<(&str, String)> = pair.iter().map(|(k, v)| (k.as_str(), number(*v))).collect();
            line(&mut out, "", &cname, &fields);
        }
    }
    if in_marker {
        let _ = writeln!(out, "    {:<8}  'MARKER'{:17}'INTEND'", format!("MARKER{markers}"), "");
    }

    out.push_str("RHS\n");
    let rhs: Vec<(String, f64)> = lp
        .rows()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.rhs != 0.0)
        .map(|(i, r)| (row_name(i), r.rhs))
        .collect();
    for pair in rhs.chunks(2) {
        let fields: Vec<(&str, String)> = pair.iter().map(|(k, v)| (k.as_str(), number(*v))).collect();
        line(&mut out, "", "RHS", &fields);
    }

    out.push_str("BOUNDS\n");
    for j in 0..lp.num_vars() {
        let (lo, hi) = (lp.lower()[j], lp.upper()[j]);
        let cname = col_name(j);
        if lo == hi {
            line(&mut out, "FX", "BND", &[(&cname, number(lo))]);
            continue;
        }
        match (lo.is_finite(), hi.is_finite()) {
            (false, false) => line(&mut out, "FR", "BND", &[(&cname, String::new())]),
            (false, true) => {
                line(&mut out, "MI", "BND", &[(&cname, String::new())]);
                line(&mut out, "UP", "BND", &[(&cname, number(hi))]);
            }
            (true, _) => {
                if lo != 0.0 {
                    line(&mut out, "LO", "BND", &[(&cname, number(lo))]);
                }
                if hi.is_finite() {
                    line(&mut out, "UP", "BND", &[(&cname, number(hi))]);
                }
            }
        }
    }
    out.push_str("ENDATA\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::Row;

    #[test]
    fn field_layout() {
        let mut lp = LinearProgram::new();
        let x = lp.add_var(0.0, 1.0, 0.0).unwrap();
        let y = lp.add_var(0.0, f64::INFINITY, 1.0).unwrap();
        lp.add_row(Row::new(vec![(x, 3.0), (y, -1.0)], Sense::Le, 0.0)).unwrap();
        lp.add_row(Row::new(vec![(x, 1.0)], Sense::Ge, 1.0)).unwrap();
        let text = write_mps(&lp, "tiny", Some(&[true, false]));
        let expected = "\
NAME          tiny
ROWS
 N  OBJ
 L  R0000001
 G  R0000002
COLUMNS
    MARKER0   'MARKER'                 'INTORG'
    C0000001  R0000001             3   R0000002             1
    MARKER1   'MARKER'                 'INTEND'
    C0000002  OBJ                  1   R0000001            -1
RHS
    RHS       R0000002             1
BOUNDS
 UP BND       C0000001             1
ENDATA
";
        assert_eq!(text, expected);
        // value fields end at column 36 and 61
        let l = text.lines().find(|l| l.starts_with("    C0000002")).unwrap();
        assert_eq!(&l[4..12], "C0000002");
        assert_eq!(&l[14..17], "OBJ");
        assert_eq!(l[24..36].trim(), "1");
        assert_eq!(&l[39..47], "R0000001");
        assert_eq!(l[49..61].trim(), "-1");
    }

    #[test]
    fn long_numbers_fit_the_field() {
        for v in [1.0 / 3.0, -123456789.123, 1e-30, 6.02e23] {
            let s = number(v);
            assert!(s.len() <= 12, "{s}");
            let back: f64 = s.parse().unwrap();
            assert!((back - v).abs() <= 1e-4 * v.abs());
        }
    }

    #[test]
    fn free_and_fixed_bounds() {
        let mut lp = LinearProgram::new();
        lp.add_var(f64::NEG_INFINITY, f64::INFINITY, 0.0).unwrap();
        lp.add_var(2.0, 2.0, 0.0).unwrap();
        lp.add_var(f64::NEG_INFINITY, 4.0, 0.0).unwrap();
        lp.add_var(-1.0, f64::INFINITY, 0.0).unwrap();
        let text = write_mps(&lp, "b", None);
        assert!(text.contains(" FR BND       C0000001\n"));
        assert!(text.contains(" FX BND       C0000002             2\n"));
        assert!(text.contains(" MI BND       C0000003\n UP BND       C0000003             4\n"));
        assert!(text.contains(" LO BND       C0000004            -1\n"));
    }
}
