"""Main entry point for the EcaSeq command line"""
import sys
from app import EcaSeqApp

if __name__ == "__main__":
    app = EcaSeqApp(sys.argv)
    app.run()
