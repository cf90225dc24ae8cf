import subprocess
import sys


def main():
    code = subprocess.call([sys.executable, "-m", "unittest", "discover", "-s", "tests", "-t", "."])
    print("\n\nTests completed.")
    sys.exit(code)


if __name__ == "__main__":
    main()
