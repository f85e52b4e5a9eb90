fn main() {
    std::process::exit(hookbias::cli::main_with_args(std::env::args_os()));
}
