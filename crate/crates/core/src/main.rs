use clap::Parser;

fn main() {
    let cli = superbialg::cli::Cli::parse();
    std::process::exit(superbialg::cli::run(cli));
}
