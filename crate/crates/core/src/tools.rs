//! Running external gtools programs (`geng`, `shortg`) over pipes.
//!
//! A missing binary is reported as [`ToolError::ToolUnavailable`]. Callers
//! that use the tools for cross-checking should skip on that error rather
//! than fail.

use std::env;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::{Child, ChildStdout, Command, ExitStatus, Stdio};
use std::thread::JoinHandle;

use thiserror::Error;

/// Environment variable naming the directory that holds the gtools binaries.
pub const TOOL_DIR_ENV: &str = "GTOOLS_DIR";

#[derive(Debug, Error)]
pub enum ToolError {
    #[error("invalid tool invocation: {0}")]
    InvalidSpec(String),
    #[error("`{command}` was not found")]
    ToolUnavailable { command: String },
    #[error("`{command}` exited with {status}: {stderr}")]
    ChildFailed {
        command: String,
        status: ExitStatus,
        stderr: String,
    },
    #[error("`{command}`: {source}")]
    Io {
        command: String,
        #[source]
        source: io::Error,
    },
}

impl ToolError {
    pub fn is_unavailable(&self) -> bool {
        matches!(self, ToolError::ToolUnavailable { .. })
    }
}

/// Which program to run, with what arguments and where to look for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToolSpec {
    tool_dir: Option<PathBuf>,
    command: String,
    args: Vec<String>,
}

impl ToolSpec {
    pub fn new<S: Into<String>>(
        command: impl Into<String>,
        args: impl IntoIterator<Item = S>,
    ) -> Result<Self, ToolError> {
        let command = command.into();
        if command.is_empty() {
            return Err(ToolError::InvalidSpec("empty command".into()));
        }
        let args: Vec<String> = args.into_iter().map(Into::into).collect();
        if let Some(a) = args.iter().find(|a| a.contains('\n')) {
            return Err(ToolError::InvalidSpec(format!(
                "argument {a:?} contains a newline"
            )));
        }
        Ok(ToolSpec {
            tool_dir: None,
            command,
            args,
        })
    }

    /// `geng -q n`: every graph on `n` vertices up to isomorphism.
    pub fn geng(n: usize) -> Self {
        ToolSpec::new("geng", ["-q".to_string(), n.to_string()]).unwrap()
    }

    /// `shortg -q`: deduplicates graph6 lines read from standard input.
    pub fn shortg() -> Self {
        ToolSpec::new("shortg", ["-q"]).unwrap()
    }

    pub fn with_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.tool_dir = Some(dir.into());
        self
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn args(&self) -> &[String] {
        &self.args
    }

    pub fn tool_dir(&self) -> Option<&Path> {
        self.tool_dir.as_deref()
    }

    /// Locates the executable: the configured directory first, then
    /// `$GTOOLS_DIR`, then each entry of `$PATH`. Packaged builds that name
    /// the programs `nauty-geng` and so on are found as well.
    pub fn resolve(&self) -> Result<PathBuf, ToolError> {
        if self.command.contains('/') {
            let p = PathBuf::from(&self.command);
            return if is_executable(&p) {
                Ok(p)
            } else {
                Err(self.unavailable())
            };
        }
        let mut dirs: Vec<PathBuf> = self.tool_dir.iter().cloned().collect();
        if let Some(d) = env::var_os(TOOL_DIR_ENV).filter(|d| !d.is_empty()) {
            dirs.push(PathBuf::from(d));
        }
        if let Some(path) = env::var_os("PATH") {
            dirs.extend(env::split_paths(&path));
        }
        let names = [self.command.clone(), format!("nauty-{}", self.command)];
        dirs.iter()
            .flat_map(|d| names.iter().map(move |n| d.join(n)))
            .find(|p| is_executable(p))
            .ok_or_else(|| self.unavailable())
    }

    fn unavailable(&self) -> ToolError {
        ToolError::ToolUnavailable {
            command: self.command.clone(),
        }
    }

    fn io(&self, source: io::Error) -> ToolError {
        ToolError::Io {
            command: self.command.clone(),
            source,
        }
    }

    fn spawn(&self, stdin: Stdio) -> Result<(Child, JoinHandle<String>), ToolError> {
        let exe = self.resolve()?;
        let mut child = Command::new(exe)
            .args(&self.args)
            .stdin(stdin)
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| match e.kind() {
                io::ErrorKind::NotFound | io::ErrorKind::PermissionDenied => self.unavailable(),
                _ => self.io(e),
            })?;
        let mut err = child.stderr.take().expect("stderr is piped");
        let drain = std::thread::spawn(move || {
            let mut buf = Vec::new();
            let _ = err.read_to_end(&mut buf);
            String::from_utf8_lossy(&buf).into_owned()
        });
        Ok((child, drain))
    }

    fn finish(&self, mut child: Child, drain: JoinHandle<String>) -> Result<(), ToolError> {
        let status = child.wait().map_err(|e| self.io(e))?;
        let stderr = drain.join().unwrap_or_default();
        if status.success() {
            Ok(())
        } else {
            Err(ToolError::ChildFailed {
                command: self.command.clone(),
                status,
                stderr: stderr.trim_end().to_string(),
            })
        }
    }
}

#[cfg(unix)]
fn is_executable(p: &Path) -> bool {
    use std::os::unix::fs::PermissionsExt;
    p.metadata()
        .map(|m| m.is_file() && m.permissions().mode() & 0o111 != 0)
        .unwrap_or(false)
}

#[cfg(not(unix))]
fn is_executable(p: &Path) -> bool {
    p.is_file()
}

/// Output lines of a running child, read lazily. After the last line the
/// child is reaped; a nonzero exit status is yielded as a final error.
/// Dropping the iterator early kills the child.
pub struct ToolLines {
    spec: ToolSpec,
    state: Option<(Child, JoinHandle<String>, BufReader<ChildStdout>)>,
}

impl Iterator for ToolLines {
    type Item = Result<String, ToolError>;

    fn next(&mut self) -> Option<Self::Item> {
        let (_, _, out) = self.state.as_mut()?;
        let mut line = String::new();
        match out.read_line(&mut line) {
            Ok(0) => {
                let (child, drain, _) = self.state.take()?;
                self.spec.finish(child, drain).err().map(Err)
            }
            Ok(_) => {
                if line.ends_with('\n') {
                    line.pop();
                }
                Some(Ok(line))
            }
            Err(e) => {
                let (mut child, drain, _) = self.state.take()?;
                let _ = child.kill();
                let _ = self.spec.finish(child, drain);
                Some(Err(self.spec.io(e)))
            }
        }
    }
}

impl Drop for ToolLines {
    fn drop(&mut self) {
        if let Some((mut child, drain, out)) = self.state.take() {
            drop(out);
            let _ = child.kill();
            let _ = child.wait();
            let _ = drain.join();
        }
    }
}

/// Starts the tool with no input and streams its standard output by line.
pub fn exec_stream(spec: &ToolSpec) -> Result<ToolLines, ToolError> {
    let (mut child, drain) = spec.spawn(Stdio::null())?;
    let out = BufReader::new(child.stdout.take().expect("stdout is piped"));
    Ok(ToolLines {
        spec: spec.clone(),
        state: Some((child, drain, out)),
    })
}

/// Writes every input line to the tool, closes its standard input, then
/// reads its whole output.
pub fn exec_bidi<I>(spec: &ToolSpec, input: I) -> Result<Vec<String>, ToolError>
where
    I: IntoIterator,
    I::Item: AsRef<str>,
{
    let (mut child, drain) = spec.spawn(Stdio::piped())?;
    let written = {
        let mut stdin = io::BufWriter::new(child.stdin.take().expect("stdin is piped"));
        input
            .into_iter()
            .try_for_each(|l| writeln!(stdin, "{}", l.as_ref()))
            .and_then(|_| stdin.flush())
    };
    let mut text = String::new();
    let read = child
        .stdout
        .take()
        .expect("stdout is piped")
        .read_to_string(&mut text);
    spec.finish(child, drain)?;
    written.map_err(|e| spec.io(e))?;
    read.map_err(|e| spec.io(e))?;
    Ok(text.lines().map(str::to_string).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(script: &str) -> ToolSpec {
        ToolSpec::new("sh", ["-c", script]).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(ToolSpec::new("", Vec::<String>::new()).is_err());
        assert!(ToolSpec::new("geng", ["-q\n5"]).is_err());
        let g = ToolSpec::geng(5).with_dir("/opt/nauty");
        assert_eq!(g.args(), ["-q", "5"]);
        assert_eq!(g.tool_dir(), Some(Path::new("/opt/nauty")));
    }

    #[test]
    fn streams_lines() {
        let lines: Vec<String> = exec_stream(&sh("printf 'a\\nbb\\nc'"))
            .unwrap()
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(lines, ["a", "bb", "c"]);
    }

    #[test]
    fn failure_carries_stderr() {
        let items: Vec<_> = exec_stream(&sh("echo x; echo boom >&2; exit 3"))
            .unwrap()
            .collect();
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].as_ref().unwrap(), "x");
        match &items[1] {
            Err(ToolError::ChildFailed { stderr, .. }) => assert_eq!(stderr, "boom"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_binary_is_unavailable() {
        let spec = ToolSpec::new("no-such-tool-xyzzy", ["-q"]).unwrap();
        assert!(exec_stream(&spec).err().unwrap().is_unavailable());
        assert!(exec_bidi(&spec, ["a"]).unwrap_err().is_unavailable());
        let in_dir = ToolSpec::new("/nonexistent/geng", Vec::<String>::new()).unwrap();
        assert!(in_dir.resolve().unwrap_err().is_unavailable());
    }

    #[test]
    fn bidi_round_trip() {
        let cat = ToolSpec::new("cat", Vec::<String>::new()).unwrap();
        assert_eq!(exec_bidi(&cat, ["DqK", "D?{"]).unwrap(), ["DqK", "D?{"]);
        assert!(exec_bidi(&cat, Vec::<&str>::new()).unwrap().is_empty());
        let sorted = exec_bidi(&sh("sort -r"), ["a", "c", "b"]).unwrap();
        assert_eq!(sorted, ["c", "b", "a"]);
    }

    #[test]
    fn early_drop_kills_child() {
        let mut lines = exec_stream(&sh("yes")).unwrap();
        assert_eq!(lines.next().unwrap().unwrap(), "y");
        drop(lines);
    }

    #[test]
    fn explicit_dir_is_searched() {
        let spec = ToolSpec::new("sh", Vec::<String>::new())
            .unwrap()
            .with_dir("/bin");
        assert_eq!(spec.resolve().unwrap(), Path::new("/bin/sh"));
    }
}
