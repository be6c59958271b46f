//! Vertex weight files: `v w` per line, `#` comments, unlisted vertices weigh 1.

pub struct WeightError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn parse(text: &str, n: usize) -> Result<Vec<f64>, WeightError> {
    let mut w = vec![1.0; n];
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |column: usize, message: String| WeightError {
            line: i + 1,
            column,
            message,
        };
        let fields: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|f| (f.as_ptr() as usize - line.as_ptr() as usize + 1, f))
            .collect();
        let [(vc, v), (wc, value)] = fields[..] else {
            return Err(err(1, "expected `vertex weight`".into()));
        };
        let v: usize = v.parse().map_err(|_| err(vc, format!("`{v}` is not a vertex")))?;
        if v >= n {
            return Err(err(vc, format!("vertex {v} out of range (n = {n})")));
        }
        let value: f64 = value
            .parse()
            .map_err(|_| err(wc, format!("`{value}` is not a number")))?;
        if !(value.is_finite() && value >= 0.0) {
            return Err(err(wc, "weights must be finite and non-negative".into()));
        }
        w[v] = value;
    }
    Ok(w)
}
