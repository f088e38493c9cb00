use std::io::Write;

fn main() -> anyhow::Result<()> {
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    let code = cyclespec::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::io::stdout().flush()?;
    std::process::exit(code);
}
