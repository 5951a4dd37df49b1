fn main() -> std::process::ExitCode {
    epsilon_qg::cli::main()
}
