#!/usr/bin/env python3
"""
Environment check for the chamber zeta toolkit
"""

import os
import sys

def create_env_file():
    """Create .env file from .env.example if it doesn't exist"""
    if not os.path.exists('.env') and os.path.exists('.env.example'):
        print("Creating .env file from .env.example...")
        import shutil
        shutil.copy('.env.example', '.env')
        print("✅ .env file created with default settings.")
        return True
    return False

def check_requirements():
    """Check if requirements are installed"""
    try:
        import dotenv
        print("✅ All required packages are installed.")
        return True
    except ImportError as e:
        print(f"❌ Missing required package: {e}")
        print("Please run: pip install -r requirements.txt")
        return False

def validate_config():
    """Load the settings through Config, which rejects bad values"""
    from chamberzeta.config import Config

    try:
        config = Config()
    except ValueError as e:
        print(f"❌ {e}")
        print("Please edit your .env file.")
        return False

    print(config.get_summary())
    print("✅ Configuration validated.")
    return True

def main():
    """Main setup function"""
    print("🚀 Chamber Zeta Setup")
    print("=" * 50)

    create_env_file()

    if not check_requirements():
        sys.exit(1)

    if not validate_config():
        sys.exit(1)

    print("\n✅ Setup complete! Try:")
    print("   python -m chamberzeta counts --q sym --max-n 6")
    print("\nFull cross-check:")
    print("   ./run_verify.sh")

if __name__ == "__main__":
    main()
