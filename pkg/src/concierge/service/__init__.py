from concierge.service.app import create_app, resolve_data_dir, turn_response

__all__ = ["create_app", "resolve_data_dir", "turn_response"]
