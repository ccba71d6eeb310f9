import logging
import sys

import dotenv

from rigiditybench import ExperimentConfig, create_runner

dotenv.load_dotenv()


def main():
    config = ExperimentConfig(_cli_parse_args=True)

    logging.basicConfig(level=getattr(logging, config.loglevel.upper(), None))

    logging.debug("Creating SuiteRunner instance...")
    runner = create_runner(config)
    report = runner.run(config.out)
    if not config.out:
        sys.stdout.write(report.to_canonical_json())

    counts = report.status_counts()
    logging.info(
        f"[Main] {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['reported']} reported, {counts['skipped']} skipped"
    )
    return 1 if report.has_failures else 0


if __name__ == "__main__":
    sys.exit(main())
