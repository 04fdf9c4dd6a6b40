fn main() {
    std::process::exit(tracehom::cli::main_with_args(std::env::args_os()));
}
